#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ope/validation.hpp"

namespace ope {

enum class PosetKind { General, Thicket, Tree };

/// Classification of a finite poset. Tree means: nonempty, greatest element,
/// every up-set a chain. Thicket means: every principal down-set is a tree.
/// A tree is in particular a thicket.
struct PosetClass {
    PosetKind kind = PosetKind::General;
    std::optional<int> root;  // set for trees
    std::string diagnostic;   // why classification stopped where it did
};

/// A nonempty order-convex subposet with a greatest element.
struct ConvexSubtree {
    std::vector<int> carrier;  // sorted element indices
    int root = -1;             // greatest element of the carrier
};

/// Finite poset stored as an irredundant cover (Hasse) relation with the
/// reachability closure cached at construction. Immutable afterwards; all
/// queries are safe for concurrent readers.
class Poset {
public:
    Poset() = default;

    /// Builds from explicit covers (child, parent). Throws std::invalid_argument
    /// on duplicate/empty names, unknown references, cycles, or covers already
    /// implied by the transitive closure of the others.
    static Poset from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    /// Builds from an arbitrary partial order given as a strict-order predicate
    /// matrix (lt[a][b] means a < b); the Hasse reduction is computed here.
    static Poset from_relation(std::vector<std::string> names,
                               const std::vector<std::vector<bool>>& lt);

    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }

    int index_of(const std::string& name) const;  // throws std::out_of_range
    std::optional<int> find(const std::string& name) const;
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(int a, int b) const { return a == b || lt_[a][b]; }
    bool lt(int a, int b) const { return lt_[a][b]; }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    /// Elements covered by x, i.e. {s : s is a son of x}.
    const std::vector<int>& children(int x) const { return children_[x]; }
    const std::vector<int>& parents(int x) const { return parents_[x]; }
    std::vector<std::pair<int, int>> cover_pairs() const;  // (child, parent), sorted

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::vector<int> up_set(int x) const;
    std::vector<int> down_set(int x) const;

    /// Least upper bound of {a, b}, or nullopt when there is none or several
    /// minimal common upper bounds exist. `why`, if given, receives a "no-sup"
    /// diagnostic in the nullopt case.
    std::optional<int> sup2(int a, int b, std::string* why = nullptr) const;

    /// Least upper bound of a nonempty set of elements.
    std::optional<int> sup_set(const std::vector<int>& xs, std::string* why = nullptr) const;

    const PosetClass& classification() const { return class_; }
    bool is_tree() const { return class_.kind == PosetKind::Tree; }
    bool is_thicket() const { return class_.kind != PosetKind::General && !empty(); }

    bool operator==(const Poset& other) const;

private:
    std::vector<std::string> names_;             // sorted; index is the element id
    std::vector<std::vector<int>> children_;     // Hasse: x covers children_[x][k]
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<bool>> lt_;          // strict reachability closure
    PosetClass class_{PosetKind::General, std::nullopt, "empty"};

    void finish_build();  // closure, classification
    PosetClass classify() const;
};

// -- the tree/thicket calculus ------------------------------------------------

bool leq(const Poset& p, const std::string& x, const std::string& y);
std::optional<std::string> sup2(const Poset& p, const std::string& x, const std::string& y,
                                std::string* why = nullptr);

PosetClass classify_poset(const Poset& p);

/// Leaves of t (elements with empty cover, i.e. minimal elements).
std::vector<int> leaves(const Poset& t);

/// {s in lvs(t) : s <= x}. Nonempty for every x.
std::vector<int> leaves_over(const Poset& t, int x);

/// cvr(x) for a single element: its children.
std::vector<int> cover_of(const Poset& t, int x);

/// cvr(X) = union of cvr(x) over x in X, minus X. X must be order-convex
/// (a convexity error is reported via std::invalid_argument otherwise).
std::vector<int> cover_of(const Poset& t, const std::vector<int>& carrier);

/// Validates a carrier as a ConvexSubtree of t: nonempty, has a greatest
/// element, order-convex.
ValidationReport validate_convex_subtree(const Poset& t, const std::vector<int>& carrier,
                                         ConvexSubtree* out = nullptr);

/// All convex subtrees of t (t must classify at least thicket), in canonical
/// order: by root name, then carrier names.
std::vector<ConvexSubtree> convex_subtrees(const Poset& t);

/// Poset induced on a subset of elements (names kept; order restricted).
Poset induced_subposet(const Poset& p, const std::vector<int>& subset);

std::vector<int> sorted_by_name(const Poset& p, std::vector<int> xs);

}  // namespace ope
