#include "ope/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ope {

Constellation Complex::constellation_at(int i) const {
    Constellation c;
    c.lower = levels.at(i);
    c.upper = levels.at(i + 1);
    c.sigma = sigmas.at(i);
    c.mode = kind == ComplexKind::Tree ? ConstellationMode::Tree : ConstellationMode::Thicket;
    return c;
}

bool Complex::operator==(const Complex& other) const {
    return kind == other.kind && levels == other.levels && sigmas == other.sigmas;
}

ValidationReport validate_complex(const Complex& x) {
    ValidationReport rep;
    if (x.levels.empty()) {
        rep.fail("no-levels", "a complex has at least the dimension-0 level");
        return rep;
    }
    if (x.sigmas.size() + 1 != x.levels.size()) {
        rep.fail("level-constellation-mismatch",
                 "expected one constellation per consecutive level pair");
        return rep;
    }
    const bool tree_kind = x.kind == ComplexKind::Tree;
    for (int i = 0; i <= x.dim(); ++i) {
        const Poset& lv = x.levels[i];
        if (lv.empty()) {
            rep.fail("empty-level", "level " + std::to_string(i) + " is empty");
            continue;
        }
        if (tree_kind && !lv.is_tree())
            rep.fail("level-not-tree", "level " + std::to_string(i) + " does not classify as a tree");
        if (!tree_kind && !lv.is_thicket())
            rep.fail("level-not-thicket", "level " + std::to_string(i) + " is not a thicket");
    }
    if (x.levels[0].size() != 1) rep.fail("t0-not-singleton", "level 0 must be a singleton");
    if (tree_kind && x.levels.back().size() != 1)
        rep.fail("top-not-singleton", "the top level of a tree complex must be a singleton");
    {
        std::set<std::string> seen;
        for (const Poset& lv : x.levels)
            for (const std::string& n : lv.names())
                if (!seen.insert(n).second)
                    rep.fail("node-name-reused", "node '" + n + "' appears on two levels");
    }
    if (!rep.ok()) return rep;

    for (int i = 0; i < x.dim(); ++i) {
        ValidationReport sub = validate_constellation(x.constellation_at(i));
        rep.merge(sub, "constellation " + std::to_string(i));
    }
    return rep;
}

std::vector<int> size_of(const Complex& x) {
    std::vector<int> out;
    for (const Poset& lv : x.levels) out.push_back(static_cast<int>(lv.maximal_elements().size()));
    return out;
}

ConstellationOrder complex_order_at(const Complex& x, int i) {
    if (i < 0 || i > x.dim()) throw std::out_of_range("complex_order_at: no such level");
    if (i < x.dim()) return constellation_order(x.constellation_at(i));
    // Top level: vertices only, pairwise incomparable by the order clauses.
    const Poset& top = x.levels[i];
    std::vector<std::string> names;
    std::vector<OrderNode> nodes;
    for (int k = 0; k < top.size(); ++k) {
        names.push_back(vertex_name(top.name(k)));
        nodes.push_back({OrderNode::Vertex, k});
    }
    ConstellationOrder out;
    Poset built = Poset::from_relation(names, std::vector<std::vector<bool>>(
                                                  names.size(), std::vector<bool>(names.size(), false)));
    out.nodes.resize(names.size());
    for (size_t k = 0; k < names.size(); ++k) out.nodes[built.index_of(names[k])] = nodes[k];
    out.poset = std::move(built);
    return out;
}

ComplexMorphism identity_morphism(const Complex& x) {
    ComplexMorphism f;
    f.source = x;
    f.target = x;
    for (const Poset& lv : x.levels) {
        std::vector<int> id(lv.size());
        for (int k = 0; k < lv.size(); ++k) id[k] = k;
        f.maps.push_back(std::move(id));
    }
    return f;
}

bool ComplexMorphism::operator==(const ComplexMorphism& other) const {
    return source == other.source && target == other.target && maps == other.maps;
}

ValidationReport validate_complex_morphism(const ComplexMorphism& f) {
    ValidationReport rep;
    rep.merge(validate_complex(f.source), "source");
    rep.merge(validate_complex(f.target), "target");
    if (!rep.ok()) return rep;
    if (f.source.dim() > f.target.dim()) {
        rep.fail("dimension-exceeds-target", "no embedding of a level into an absent level");
        return rep;
    }
    if (static_cast<int>(f.maps.size()) != f.source.dim() + 1) {
        rep.fail("map-not-total", "expected one level map per source level");
        return rep;
    }
    for (int i = 0; i <= f.source.dim(); ++i) {
        if (static_cast<int>(f.maps[i].size()) != f.source.levels[i].size()) {
            rep.fail("map-not-total", "level " + std::to_string(i) + " map is partial");
            return rep;
        }
        for (int v : f.maps[i])
            if (v < 0 || v >= f.target.levels[i].size())
                rep.fail("unknown-element", "level " + std::to_string(i) + " map leaves the target");
    }
    if (!rep.ok()) return rep;

    for (int i = 0; i <= f.source.dim(); ++i)
        if (!is_embedding(f.source.levels[i], f.target.levels[i], f.maps[i]))
            rep.fail("level-not-embedding", "level " + std::to_string(i) + " map is not an embedding");
    if (!rep.ok()) return rep;

    for (int i = 0; i + 1 <= f.source.dim(); ++i) {
        auto check = validate_constellation_morphism(f.maps[i + 1], f.maps[i],
                                                     f.source.constellation_at(i),
                                                     f.target.constellation_at(i));
        rep.merge(check.report, "levels " + std::to_string(i) + "/" + std::to_string(i + 1));
    }
    // The pair above the source dimension: the induced map sends the top
    // vertices into the target's order at that level; sups of distinct
    // vertices are undefined, so only the embedding condition is left, and it
    // was checked already.
    return rep;
}

ComplexMorphism compose_complex_morphisms(const ComplexMorphism& g, const ComplexMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose_complex_morphisms: endpoints do not match");
    ComplexMorphism out;
    out.source = f.source;
    out.target = g.target;
    for (size_t i = 0; i < f.maps.size(); ++i) {
        std::vector<int> m(f.maps[i].size());
        for (size_t k = 0; k < f.maps[i].size(); ++k) m[k] = g.maps[i][f.maps[i][k]];
        out.maps.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<int>> complex_colors(const Complex& x) {
    const int L = x.dim() + 1;
    std::vector<std::vector<int>> color(L);
    for (int i = 0; i < L; ++i) color[i].assign(x.levels[i].size(), 0);

    auto in_sigma = [&](int i, int u, int low) {
        const auto& car = x.sigmas[i][u];
        return std::binary_search(car.begin(), car.end(), low);
    };

    for (int round = 0; round < 2 * L + 4; ++round) {
        bool changed = false;
        for (int i = 0; i < L; ++i) {
            const Poset& lv = x.levels[i];
            std::vector<std::vector<int>> sig(lv.size());
            for (int a = 0; a < lv.size(); ++a) {
                std::vector<int>& s = sig[a];
                s.push_back(color[i][a]);
                std::vector<int> tmp;
                for (int c : lv.children(a)) tmp.push_back(color[i][c]);
                std::sort(tmp.begin(), tmp.end());
                s.push_back(-1);
                s.insert(s.end(), tmp.begin(), tmp.end());
                tmp.clear();
                for (int p : lv.parents(a)) tmp.push_back(color[i][p]);
                std::sort(tmp.begin(), tmp.end());
                s.push_back(-2);
                s.insert(s.end(), tmp.begin(), tmp.end());
                if (i + 1 < L) {  // who contains me
                    tmp.clear();
                    for (int u = 0; u < x.levels[i + 1].size(); ++u)
                        if (in_sigma(i, u, a)) tmp.push_back(color[i + 1][u]);
                    std::sort(tmp.begin(), tmp.end());
                    s.push_back(-3);
                    s.insert(s.end(), tmp.begin(), tmp.end());
                }
                if (i > 0) {  // what I contain
                    tmp.clear();
                    for (int low : x.sigmas[i - 1][a]) tmp.push_back(color[i - 1][low]);
                    std::sort(tmp.begin(), tmp.end());
                    s.push_back(-4);
                    s.insert(s.end(), tmp.begin(), tmp.end());
                }
            }
            std::vector<std::vector<int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int a = 0; a < lv.size(); ++a) {
                int nc = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[a]) -
                                          sorted.begin());
                if (nc != color[i][a]) changed = true;
                color[i][a] = nc;
            }
        }
        if (!changed) break;
    }
    return color;
}

namespace {

struct IsoSearch {
    const Complex& x;
    const Complex& y;
    std::vector<std::vector<int>> cx, cy;
    std::vector<std::vector<int>> maps;  // maps[i][xa] = yb or -1

    bool level_compatible(int i, int a, int b) {
        if (cx[i][a] != cy[i][b]) return false;
        const Poset& px = x.levels[i];
        const Poset& py = y.levels[i];
        for (int a2 = 0; a2 < px.size(); ++a2) {
            int b2 = maps[i][a2];
            if (b2 < 0) continue;
            if (b2 == b && a2 != a) return false;
            if (px.leq(a, a2) != py.leq(b, b2)) return false;
            if (px.leq(a2, a) != py.leq(b2, b)) return false;
        }
        return true;
    }

    bool sigma_compatible(int i) {
        // levels i and i+1 fully mapped: carriers must correspond exactly
        for (int u = 0; u < x.levels[i + 1].size(); ++u) {
            std::vector<int> img;
            for (int low : x.sigmas[i][u]) img.push_back(maps[i][low]);
            std::sort(img.begin(), img.end());
            if (img != y.sigmas[i][maps[i + 1][u]]) return false;
        }
        return true;
    }

    bool assign_level(int i, int a) {
        const Poset& px = x.levels[i];
        if (a == px.size()) {
            if (i > 0 && !sigma_compatible(i - 1)) return false;
            if (i == x.dim()) return true;
            maps[i + 1].assign(x.levels[i + 1].size(), -1);
            return assign_level(i + 1, 0);
        }
        for (int b = 0; b < y.levels[i].size(); ++b) {
            if (!level_compatible(i, a, b)) continue;
            maps[i][a] = b;
            if (assign_level(i, a + 1)) return true;
            maps[i][a] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> complexes_isomorphic(const Complex& x,
                                                                  const Complex& y) {
    if (x.kind != y.kind || x.dim() != y.dim()) return std::nullopt;
    for (int i = 0; i <= x.dim(); ++i)
        if (x.levels[i].size() != y.levels[i].size()) return std::nullopt;

    IsoSearch search{x, y, complex_colors(x), complex_colors(y), {}};
    // color histograms must agree level-wise
    for (int i = 0; i <= x.dim(); ++i) {
        std::vector<int> hx = search.cx[i], hy = search.cy[i];
        std::sort(hx.begin(), hx.end());
        std::sort(hy.begin(), hy.end());
        if (hx != hy) return std::nullopt;
    }
    search.maps.assign(x.dim() + 1, {});
    search.maps[0].assign(x.levels[0].size(), -1);
    if (!search.assign_level(0, 0)) return std::nullopt;
    return search.maps;
}

}  // namespace ope
