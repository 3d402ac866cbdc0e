#include "ope/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ope {

namespace {

bool whitespace_only(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void check_names(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || whitespace_only(n))
            throw std::invalid_argument("poset: empty or whitespace-only element name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("poset: duplicate element name '" + n + "'");
    }
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    check_names(names);
    std::sort(names.begin(), names.end());
    Poset p;
    p.names_ = std::move(names);
    const int n = p.size();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[p.names_[i]] = i;

    std::vector<std::vector<bool>> direct(n, std::vector<bool>(n, false));
    for (const auto& [c, par] : covers) {
        auto ic = idx.find(c), ip = idx.find(par);
        if (ic == idx.end()) throw std::out_of_range("poset: unknown element '" + c + "'");
        if (ip == idx.end()) throw std::out_of_range("poset: unknown element '" + par + "'");
        if (ic->second == ip->second)
            throw std::invalid_argument("poset: reflexive cover on '" + c + "'");
        if (direct[ic->second][ip->second])
            throw std::invalid_argument("poset: duplicate cover (" + c + ", " + par + ")");
        direct[ic->second][ip->second] = true;
    }

    // Reachability closure (DFS), with cycle detection.
    p.lt_.assign(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y)
                if (direct[x][y] && !p.lt_[s][y]) {
                    p.lt_[s][y] = true;
                    stack.push_back(y);
                }
        }
        if (p.lt_[s][s]) throw std::invalid_argument("poset: cover relation has a cycle through '" +
                                                     p.names_[s] + "'");
    }

    // Every cover must be a genuine Hasse edge.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (direct[a][b])
                for (int z = 0; z < n; ++z)
                    if (p.lt_[a][z] && p.lt_[z][b])
                        throw std::invalid_argument("poset: redundant cover (" + p.names_[a] + ", " +
                                                    p.names_[b] + ") implied via '" + p.names_[z] + "'");

    p.children_.assign(n, {});
    p.parents_.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (direct[a][b]) {
                p.children_[b].push_back(a);
                p.parents_[a].push_back(b);
            }
    p.finish_build();
    return p;
}

Poset Poset::from_relation(std::vector<std::string> names,
                           const std::vector<std::vector<bool>>& lt_in) {
    check_names(names);
    const int n = static_cast<int>(names.size());
    // Re-sort names; permute the relation accordingly.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a] < names[b]; });

    Poset p;
    p.names_.resize(n);
    p.lt_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.names_[i] = names[order[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.lt_[i][j] = lt_in[order[i]][order[j]];

    for (int i = 0; i < n; ++i)
        if (p.lt_[i][i]) throw std::invalid_argument("poset: relation not irreflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.lt_[i][j])
                for (int k = 0; k < n; ++k)
                    if (p.lt_[j][k] && !p.lt_[i][k])
                        throw std::invalid_argument("poset: relation not transitive");

    p.children_.assign(n, {});
    p.parents_.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.lt_[a][b]) {
                bool hasse = true;
                for (int z = 0; z < n && hasse; ++z)
                    if (p.lt_[a][z] && p.lt_[z][b]) hasse = false;
                if (hasse) {
                    p.children_[b].push_back(a);
                    p.parents_[a].push_back(b);
                }
            }
    p.finish_build();
    return p;
}

void Poset::finish_build() {
    for (auto& v : children_) std::sort(v.begin(), v.end());
    for (auto& v : parents_) std::sort(v.begin(), v.end());
    class_ = classify();
}

int Poset::index_of(const std::string& n) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), n);
    if (it == names_.end() || *it != n)
        throw std::out_of_range("poset: element not found: '" + n + "'");
    return static_cast<int>(it - names_.begin());
}

std::optional<int> Poset::find(const std::string& n) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), n);
    if (it == names_.end() || *it != n) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < size(); ++p)
        for (int c : children_[p]) out.emplace_back(c, p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (children_[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (parents_[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> Poset::up_set(int x) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (leq(x, i)) out.push_back(i);
    return out;
}

std::vector<int> Poset::down_set(int x) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (leq(i, x)) out.push_back(i);
    return out;
}

std::optional<int> Poset::sup2(int a, int b, std::string* why) const {
    return sup_set({a, b}, why);
}

std::optional<int> Poset::sup_set(const std::vector<int>& xs, std::string* why) const {
    if (xs.empty()) {
        if (why) *why = "no-sup: empty set";
        return std::nullopt;
    }
    std::vector<int> ubs;
    for (int u = 0; u < size(); ++u) {
        bool all = true;
        for (int x : xs)
            if (!leq(x, u)) {
                all = false;
                break;
            }
        if (all) ubs.push_back(u);
    }
    if (ubs.empty()) {
        if (why) *why = "no-sup: no common upper bound";
        return std::nullopt;
    }
    std::vector<int> minimal;
    for (int u : ubs) {
        bool is_min = true;
        for (int v : ubs)
            if (v != u && lt(v, u)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(u);
    }
    if (minimal.size() != 1) {
        if (why) *why = "no-sup: several minimal common upper bounds";
        return std::nullopt;
    }
    return minimal[0];
}

PosetClass Poset::classify() const {
    PosetClass out;
    if (empty()) {
        out.kind = PosetKind::General;
        out.diagnostic = "empty";
        return out;
    }
    auto is_tree_on = [&](const std::vector<int>& subset, int* root_out) {
        // greatest element within subset
        int root = -1;
        for (int x : subset) {
            bool top = true;
            for (int y : subset)
                if (!leq(y, x)) {
                    top = false;
                    break;
                }
            if (top) {
                root = x;
                break;
            }
        }
        if (root < 0) return false;
        // every up-set within subset is a chain
        for (int x : subset) {
            std::vector<int> up;
            for (int y : subset)
                if (leq(x, y)) up.push_back(y);
            for (size_t i = 0; i < up.size(); ++i)
                for (size_t j = i + 1; j < up.size(); ++j)
                    if (!comparable(up[i], up[j])) return false;
        }
        if (root_out) *root_out = root;
        return true;
    };

    std::vector<int> all(size());
    std::iota(all.begin(), all.end(), 0);
    int root = -1;
    if (is_tree_on(all, &root)) {
        out.kind = PosetKind::Tree;
        out.root = root;
        return out;
    }
    bool thicket = true;
    for (int p = 0; p < size() && thicket; ++p)
        if (!is_tree_on(down_set(p), nullptr)) {
            thicket = false;
            out.diagnostic = "down-set of '" + names_[p] + "' is not a tree";
        }
    if (thicket) {
        out.kind = PosetKind::Thicket;
        out.diagnostic = "no greatest element or some up-set is not a chain";
        return out;
    }
    out.kind = PosetKind::General;
    return out;
}

bool Poset::operator==(const Poset& other) const {
    return names_ == other.names_ && children_ == other.children_;
}

// -- free functions -----------------------------------------------------------

bool leq(const Poset& p, const std::string& x, const std::string& y) {
    return p.leq(p.index_of(x), p.index_of(y));
}

std::optional<std::string> sup2(const Poset& p, const std::string& x, const std::string& y,
                                std::string* why) {
    auto r = p.sup2(p.index_of(x), p.index_of(y), why);
    if (!r) return std::nullopt;
    return p.name(*r);
}

PosetClass classify_poset(const Poset& p) { return p.classification(); }

std::vector<int> leaves(const Poset& t) { return t.minimal_elements(); }

std::vector<int> leaves_over(const Poset& t, int x) {
    std::vector<int> out;
    for (int s : t.minimal_elements())
        if (t.leq(s, x)) out.push_back(s);
    return out;
}

std::vector<int> cover_of(const Poset& t, int x) { return t.children(x); }

std::vector<int> cover_of(const Poset& t, const std::vector<int>& carrier) {
    ValidationReport r = validate_convex_subtree(t, carrier, nullptr);
    // Order-convexity is all cvr(X) needs; a missing greatest element is fine
    // for the partition-lemma use sites, but the spec pins the convexity error.
    for (const auto& issue : r.issues())
        if (issue.code == "not-convex")
            throw std::invalid_argument("cover_of: carrier not convex: " + issue.detail);
    std::vector<bool> in(t.size(), false);
    for (int x : carrier) in[x] = true;
    std::set<int> out;
    for (int x : carrier)
        for (int c : t.children(x))
            if (!in[c]) out.insert(c);
    return {out.begin(), out.end()};
}

ValidationReport validate_convex_subtree(const Poset& t, const std::vector<int>& carrier,
                                         ConvexSubtree* out) {
    ValidationReport rep;
    if (carrier.empty()) {
        rep.fail("empty-carrier", "convex subtree must be nonempty");
        return rep;
    }
    for (int x : carrier)
        if (x < 0 || x >= t.size()) {
            rep.fail("unknown-element", "carrier index out of range");
            return rep;
        }
    int root = -1;
    for (int x : carrier) {
        bool top = true;
        for (int y : carrier)
            if (!t.leq(y, x)) {
                top = false;
                break;
            }
        if (top) {
            root = x;
            break;
        }
    }
    if (root < 0) rep.fail("no-root", "carrier has no greatest element");
    std::vector<bool> in(t.size(), false);
    for (int x : carrier) in[x] = true;
    for (int x : carrier)
        for (int y : carrier)
            if (t.lt(x, y))
                for (int s = 0; s < t.size(); ++s)
                    if (!in[s] && t.lt(x, s) && t.lt(s, y))
                        rep.fail("not-convex", "'" + t.name(s) + "' lies between '" + t.name(x) +
                                                   "' and '" + t.name(y) + "' but is missing");
    if (rep.ok() && out) {
        out->carrier = carrier;
        std::sort(out->carrier.begin(), out->carrier.end());
        out->root = root;
    }
    return rep;
}

std::vector<ConvexSubtree> convex_subtrees(const Poset& t) {
    if (!t.is_thicket())
        throw std::invalid_argument("convex_subtrees: poset does not classify as a thicket");
    const int n = t.size();
    std::vector<ConvexSubtree> out;
    // Grow from each potential root downward: a convex subtree with root r is a
    // down-closed-within-[*, r] selection; enumerate by subset filter (desk scale).
    if (n > 20) throw std::invalid_argument("convex_subtrees: poset too large for enumeration");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<int> carrier;
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) carrier.push_back(i);
        ConvexSubtree cs;
        if (validate_convex_subtree(t, carrier, &cs).ok()) out.push_back(cs);
    }
    std::sort(out.begin(), out.end(), [&](const ConvexSubtree& a, const ConvexSubtree& b) {
        if (t.name(a.root) != t.name(b.root)) return t.name(a.root) < t.name(b.root);
        std::vector<std::string> an, bn;
        for (int x : a.carrier) an.push_back(t.name(x));
        for (int x : b.carrier) bn.push_back(t.name(x));
        return an < bn;
    });
    return out;
}

Poset induced_subposet(const Poset& p, const std::vector<int>& subset) {
    std::vector<std::string> names;
    for (int x : subset) names.push_back(p.name(x));
    const int m = static_cast<int>(subset.size());
    std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) lt[i][j] = p.lt(subset[i], subset[j]);
    return Poset::from_relation(std::move(names), lt);
}

std::vector<int> sorted_by_name(const Poset& p, std::vector<int> xs) {
    std::sort(xs.begin(), xs.end(),
              [&](int a, int b) { return p.name(a) < p.name(b); });
    return xs;
}

}  // namespace ope
