#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ope/validation.hpp"

namespace ope {

struct FaceRef {
    int dim = -1;
    int idx = -1;
    auto operator<=>(const FaceRef&) const = default;
};

enum class OrderKind { Lower, Upper };
enum class HypergraphClass { Hypergraph, OpetopicCardinal, PositiveOpetope };

struct Classification {
    HypergraphClass kind = HypergraphClass::Hypergraph;
    ValidationReport axioms;     // one issue per violated axiom, with witnesses
    std::vector<int> size;       // size(S)_n = |S_n - delta(S_{n+1})|, one entry per dimension
};

/// Graded face sets with a codomain function gamma and a nonempty-set-valued
/// domain assignment delta (single-valued at dimension 0). Face names are
/// globally unique. Orders are closed once at construction; values are
/// immutable afterwards.
class Hypergraph {
public:
    Hypergraph() = default;
    /// faces[k] lists the k-dimensional face names; gamma/delta are keyed by
    /// face name. Throws std::invalid_argument on structural defects: empty or
    /// duplicate names, gaps in the grading, missing or dangling gamma/delta,
    /// duplicate delta entries, empty delta, multi-valued delta at dimension 0.
    Hypergraph(std::vector<std::vector<std::string>> faces,
               const std::map<std::string, std::string>& gamma,
               const std::map<std::string, std::vector<std::string>>& delta);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }
    int count(int k) const {
        return k >= 0 && k <= dim() ? static_cast<int>(faces_[k].size()) : 0;
    }
    const std::vector<std::string>& faces(int k) const { return faces_[k]; }
    const std::string& name(FaceRef f) const { return faces_[f.dim][f.idx]; }
    FaceRef face(const std::string& name) const;  // throws std::out_of_range
    std::optional<FaceRef> find(const std::string& name) const;
    std::vector<FaceRef> all_faces() const;

    FaceRef gamma(FaceRef f) const;                   // f.dim >= 1
    const std::vector<int>& delta(FaceRef f) const;   // indices at f.dim - 1
    std::vector<FaceRef> delta_faces(FaceRef f) const;

    /// gamma^(k): identity for dim(p) <= k, else repeated gamma.
    FaceRef gamma_iter(FaceRef p, int k) const;

    bool lower_lt(int k, int a, int b) const { return lower_[k][a][b]; }
    bool upper_lt(int k, int a, int b) const { return upper_[k][a][b]; }
    bool lower_lt(FaceRef a, FaceRef b) const;
    bool upper_lt(FaceRef a, FaceRef b) const;
    bool lower_perp(FaceRef a, FaceRef b) const;
    bool upper_perp(FaceRef a, FaceRef b) const;

    const Classification& classification() const { return class_; }
    bool is_cardinal() const { return class_.kind != HypergraphClass::Hypergraph; }
    bool is_opetope() const { return class_.kind == HypergraphClass::PositiveOpetope; }

    /// Faces of dimension k that are a gamma-image from dimension k+1.
    std::vector<bool> gamma_image(int k) const;

    bool operator==(const Hypergraph& other) const;

private:
    std::vector<std::vector<std::string>> faces_;
    std::map<std::string, FaceRef> index_;
    std::vector<std::vector<int>> gamma_;                // [k][i]: S_{k+1} -> S_k
    std::vector<std::vector<std::vector<int>>> delta_;   // [k][i]: sorted subsets of S_k
    std::vector<std::vector<std::vector<bool>>> lower_;  // per dim, strict closure
    std::vector<std::vector<std::vector<bool>>> upper_;
    Classification class_;

    void close_orders();
    Classification classify() const;
};

struct OrderRelation {
    int dimension = 0;
    OrderKind kind = OrderKind::Lower;
    std::vector<std::pair<std::string, std::string>> pairs;  // strict closure, sorted
};

Classification classify_hypergraph(const Hypergraph& h);
OrderRelation order(const Hypergraph& h, int k, OrderKind kind);
FaceRef gamma_iter(const Hypergraph& h, FaceRef p, int k);

/// Witness upper path through P_{n+1} - gamma(P_{n+2}) from a to b (both of
/// dimension n), as the face sequence a, a_0, ..., a_m, b; none when !(a <+ b).
std::optional<std::vector<FaceRef>> find_upper_path(const Hypergraph& h, FaceRef a, FaceRef b);

struct PathLemmaResult {
    int l = -1, p = -1;
    bool item1 = false, item2 = false, item3 = false, item4 = false;
    bool witness_searched = false;  // maximal interval around s failed; a sub-interval was used
};

enum class IotaConvention { Facewise, SetLevel };

/// Internal faces iota(X) for a set X of faces of dimension >= 2; see the two
/// conventions. Facewise: union over a in X of gamma delta(a) /\ delta delta(a).
std::vector<int> iota_set(const Hypergraph& h, int dim, const std::vector<int>& xs,
                          IotaConvention conv = IotaConvention::Facewise);

/// Checks the Path Lemma items for a maximal lower path at dimension n, a face
/// b of the same dimension and an anchor index s with path[s] <+ b. Throws
/// std::invalid_argument when the preconditions fail.
PathLemmaResult check_path_lemma(const Hypergraph& h, const std::vector<FaceRef>& path, FaceRef b,
                                 int s, IotaConvention conv = IotaConvention::Facewise);

/// All maximal lower paths at dimension n (paths that extend neither way).
std::vector<std::vector<FaceRef>> maximal_lower_paths(const Hypergraph& h, int n);

/// Least sub-hypergraph of h containing the given faces (closure under gamma
/// and delta), returned as per-dimension sorted index sets.
std::vector<std::vector<int>> face_closure(const Hypergraph& h, const std::vector<FaceRef>& seeds);

/// Hypergraph induced on a gamma/delta-closed face subset (names kept).
Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<std::vector<int>>& carrier);

/// S[x]: the least sub-hypergraph containing face x.
Hypergraph principal_sub(const Hypergraph& h, FaceRef x);

}  // namespace ope
