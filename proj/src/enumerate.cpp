#include "ope/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ope {

namespace {

// ----- rooted trees up to isomorphism, as canonical nested-paren codes -----

const std::vector<std::string>& tree_codes(int n) {
    static std::map<int, std::vector<std::string>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (n == 1) {
        out.push_back("()");
    } else {
        // Global ordered pool of smaller codes: (size, code) ascending.
        std::vector<std::pair<int, std::string>> pool;
        for (int s = 1; s < n; ++s)
            for (const std::string& c : tree_codes(s)) pool.emplace_back(s, c);
        std::sort(pool.begin(), pool.end());
        // Non-decreasing sequences from the pool with sizes summing to n-1.
        std::vector<int> chosen;
        std::function<void(int, int)> pick = [&](int remaining, int min_index) {
            if (remaining == 0) {
                std::string code = "(";
                for (int i : chosen) code += pool[i].second;
                code += ")";
                out.push_back(code);
                return;
            }
            for (int i = min_index; i < static_cast<int>(pool.size()); ++i) {
                if (pool[i].first > remaining) break;
                chosen.push_back(i);
                pick(remaining - pool[i].first, i);
                chosen.pop_back();
            }
        };
        pick(n - 1, 0);
        std::sort(out.begin(), out.end());
    }
    return memo[n] = out;
}

Poset tree_from_code(const std::string& code) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    int counter = 0;
    size_t pos = 0;
    std::function<std::string()> parse = [&]() -> std::string {
        // at '('
        std::string me = "n" + std::to_string(counter++);
        names.push_back(me);
        ++pos;  // consume '('
        while (code[pos] == '(') {
            std::string child = parse();
            covers.emplace_back(child, me);
        }
        ++pos;  // consume ')'
        return me;
    };
    parse();
    return Poset::from_covers(names, covers);
}

std::string poset_canon(const Poset& p) {
    // Minimal cover-list serialization over all permutations; desk scale.
    const int n = p.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    std::vector<int> inv(n);
    do {
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (auto [c, par] : p.cover_pairs()) edges.emplace_back(inv[c], inv[par]);
        std::sort(edges.begin(), edges.end());
        std::string s = std::to_string(n) + ":";
        for (auto [a, b] : edges) s += std::to_string(a) + "<" + std::to_string(b) + ";";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string pad2(int k) { return k < 10 ? "0" + std::to_string(k) : std::to_string(k); }

/// Renames elements to letter(level) + zero-padded index so that sorted name
/// order equals the original index order.
Poset rename_level(const Poset& base, int level) {
    const char letter = static_cast<char>('a' + level);
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < base.size(); ++i) names.push_back(std::string(1, letter) + pad2(i));
    for (auto [c, p] : base.cover_pairs()) covers.emplace_back(names[c], names[p]);
    return Poset::from_covers(names, covers);
}

}  // namespace

std::vector<Poset> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: need n >= 1");
    std::vector<Poset> out;
    for (const std::string& code : tree_codes(n)) out.push_back(tree_from_code(code));
    return out;
}

std::vector<Poset> enumerate_thickets(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_thickets: need n >= 1");
    if (n > 7) throw std::invalid_argument("enumerate_thickets: desk scale only");
    std::vector<Poset> out;
    std::set<std::string> seen;
    // Strict orders compatible with the index order: subsets of {(i,j) : i<j}.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const unsigned long total = 1ul << slots.size();
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    for (unsigned long mask = 0; mask < total; ++mask) {
        std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
        for (size_t s = 0; s < slots.size(); ++s)
            if (mask & (1ul << s)) lt[slots[s].first][slots[s].second] = true;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                if (lt[i][j])
                    for (int k = 0; k < n; ++k)
                        if (lt[j][k] && !lt[i][k]) {
                            transitive = false;
                            break;
                        }
        if (!transitive) continue;
        Poset p = Poset::from_relation(names, lt);
        if (!p.is_thicket()) continue;
        if (seen.insert(poset_canon(p)).second) out.push_back(p);
    }
    return out;
}

// ----- canonical code ---------------------------------------------------------

namespace {

struct CodeSearch {
    const Complex& x;
    const std::vector<std::vector<int>>& colors;
    std::vector<std::vector<int>> perms;  // perms[i][new index] = old index
    std::string best;
    bool have_best = false;

    std::string serialize_level(int i) const {
        const Poset& lv = x.levels[i];
        const auto& perm = perms[i];
        std::vector<int> inv(lv.size());
        for (int k = 0; k < lv.size(); ++k) inv[perm[k]] = k;
        std::string s = "|" + std::to_string(lv.size()) + ";";
        for (int k = 0; k < lv.size(); ++k) s += std::to_string(colors[i][perm[k]]) + ",";
        std::vector<std::pair<int, int>> edges;
        for (auto [c, p] : lv.cover_pairs()) edges.emplace_back(inv[c], inv[p]);
        std::sort(edges.begin(), edges.end());
        for (auto [a, b] : edges) s += std::to_string(a) + "<" + std::to_string(b) + ";";
        if (i > 0) {
            const auto& prev = perms[i - 1];
            std::vector<int> pinv(x.levels[i - 1].size());
            for (int k = 0; k < x.levels[i - 1].size(); ++k) pinv[prev[k]] = k;
            s += "/";
            for (int k = 0; k < lv.size(); ++k) {
                std::vector<int> car;
                for (int low : x.sigmas[i - 1][perm[k]]) car.push_back(pinv[low]);
                std::sort(car.begin(), car.end());
                s += "[";
                for (int v : car) s += std::to_string(v) + ",";
                s += "]";
            }
        }
        return s;
    }

    void level_perms(int i, std::vector<int>& perm, size_t block_start,
                     const std::vector<std::vector<int>>& blocks, size_t bi, std::string prefix) {
        if (bi == blocks.size()) {
            perms[i] = perm;
            std::string body = prefix + serialize_level(i);
            if (have_best && body.compare(0, std::min(body.size(), best.size()), best, 0,
                                          std::min(body.size(), best.size())) > 0)
                return;
            if (i == x.dim()) {
                if (!have_best || body < best) {
                    best = body;
                    have_best = true;
                }
                return;
            }
            descend(i + 1, body);
            return;
        }
        std::vector<int> block = blocks[bi];
        std::sort(block.begin(), block.end());
        do {
            for (size_t k = 0; k < block.size(); ++k) perm[block_start + k] = block[k];
            level_perms(i, perm, block_start + block.size(), blocks, bi + 1, prefix);
        } while (std::next_permutation(block.begin(), block.end()));
    }

    void descend(int i, const std::string& prefix) {
        const Poset& lv = x.levels[i];
        std::map<int, std::vector<int>> by_color;
        for (int k = 0; k < lv.size(); ++k) by_color[colors[i][k]].push_back(k);
        std::vector<std::vector<int>> blocks;
        for (auto& [c, xs] : by_color) blocks.push_back(xs);
        std::vector<int> perm(lv.size());
        level_perms(i, perm, 0, blocks, 0, prefix);
    }
};

}  // namespace

std::string canonical_code(const Complex& x) {
    ValidationReport rep = validate_complex(x);
    if (!rep.ok()) throw std::invalid_argument("canonical_code: input does not validate");
    std::vector<std::vector<int>> colors = complex_colors(x);
    CodeSearch search{x, colors, {}, "", false};
    search.perms.assign(x.dim() + 1, {});
    std::string head = (x.kind == ComplexKind::Tree ? std::string("T") : std::string("W")) +
                       std::to_string(x.dim());
    search.descend(0, head);
    return search.best;
}

// ----- complex enumeration ----------------------------------------------------

namespace {

struct ComplexGen {
    const EnumSpec& spec;
    const std::function<void(const Complex&)>& yield;
    std::map<int, std::vector<Poset>> base;  // by size, renamed lazily per level
    std::set<std::string> seen;

    const std::vector<Poset>& bases(int size) {
        auto it = base.find(size);
        if (it != base.end()) return it->second;
        std::vector<Poset> b = spec.kind == ComplexKind::Tree ? enumerate_trees(size)
                                                              : enumerate_thickets(size);
        return base[size] = std::move(b);
    }

    int cap(int level) const {
        if (!spec.level_caps || level >= static_cast<int>(spec.level_caps->size()))
            return spec.max_total_nodes;
        return (*spec.level_caps)[level];
    }

    void emit(const Complex& c) {
        if (spec.dimension && c.dim() != *spec.dimension) return;
        if (spec.kind == ComplexKind::Tree && c.levels.back().size() != 1) return;
        std::string code = canonical_code(c);
        if (seen.insert(code).second) yield(c);
    }

    void sigma_assign(Complex& c, const Poset& lower, const Poset& upper,
                      const std::vector<ConvexSubtree>& pool, std::vector<int>& order, size_t oi,
                      std::vector<std::vector<int>>& sigma, int used) {
        if (oi == order.size()) {
            c.levels.push_back(upper);
            c.sigmas.push_back(sigma);
            ValidationReport rep = validate_constellation(c.constellation_at(c.dim() - 1));
            if (rep.ok()) {
                emit(c);
                extend(c, used);
            }
            c.levels.pop_back();
            c.sigmas.pop_back();
            return;
        }
        int u = order[oi];
        const bool is_root = spec.kind == ComplexKind::Tree &&
                             upper.classification().root && *upper.classification().root == u;
        for (const ConvexSubtree& cs : pool) {
            if (is_root && static_cast<int>(cs.carrier.size()) != lower.size()) continue;
            bool fits = true;
            for (int par : upper.parents(u))
                if (!std::includes(sigma[par].begin(), sigma[par].end(), cs.carrier.begin(),
                                   cs.carrier.end())) {
                    fits = false;
                    break;
                }
            for (size_t prev = 0; prev < oi && fits; ++prev) {
                int v = order[prev];
                if (upper.comparable(u, v)) continue;
                std::vector<int> inter;
                std::set_intersection(sigma[v].begin(), sigma[v].end(), cs.carrier.begin(),
                                      cs.carrier.end(), std::back_inserter(inter));
                if (!inter.empty()) fits = false;
            }
            if (!fits) continue;
            sigma[u] = cs.carrier;
            sigma_assign(c, lower, upper, pool, order, oi + 1, sigma, used);
            sigma[u].clear();
        }
    }

    void extend(Complex& c, int used) {
        const int next_level = c.dim() + 1;
        if (spec.dimension && next_level > *spec.dimension) return;
        const Poset lower = c.levels.back();  // copy: c.levels reallocates below
        std::vector<ConvexSubtree> pool = convex_subtrees(lower);
        const int budget = spec.max_total_nodes - used;
        for (int m = 1; m <= std::min(budget, cap(next_level)); ++m)
            for (const Poset& b : bases(m)) {
                Poset upper = rename_level(b, next_level);
                // parents-before-children order
                std::vector<int> order(upper.size());
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int a, int bb) {
                    int ua = static_cast<int>(upper.up_set(a).size());
                    int ub = static_cast<int>(upper.up_set(bb).size());
                    if (ua != ub) return ua < ub;
                    return a < bb;
                });
                std::vector<std::vector<int>> sigma(upper.size());
                sigma_assign(c, lower, upper, pool, order, 0, sigma, used + m);
            }
    }

    void run() {
        if (spec.max_total_nodes < 1) return;
        if (cap(0) < 1) return;
        Complex c;
        c.kind = spec.kind;
        c.levels.push_back(rename_level(enumerate_trees(1)[0], 0));
        emit(c);
        extend(c, 1);
    }
};

}  // namespace

void enumerate_complexes(const EnumSpec& spec, const std::function<void(const Complex&)>& yield) {
    if (spec.level_caps)
        for (int c : *spec.level_caps)
            if (c < 1) throw std::invalid_argument("enumerate_complexes: caps must be >= 1");
    if (spec.dimension && spec.max_total_nodes < *spec.dimension + 1)
        throw std::invalid_argument("enumerate_complexes: total bound below dimension + 1");
    ComplexGen gen{spec, yield, {}, {}};
    gen.run();
}

std::vector<Complex> enumerate_complexes(const EnumSpec& spec) {
    std::vector<Complex> out;
    enumerate_complexes(spec, [&](const Complex& c) { out.push_back(c); });
    return out;
}

// ----- iota-epi enumeration ---------------------------------------------------

namespace {

struct EpiSearch {
    const Hypergraph& p;
    const Hypergraph& q;
    std::vector<IotaMap>& out;
    std::map<std::string, std::string> assign;

    bool dim_done_checks(int d) {
        // Domain clauses for faces one dimension up, now fully determined.
        for (int i = 0; i < p.count(d + 1); ++i) {
            FaceRef x{d + 1, i};
            FaceRef hx = q.face(assign.at(p.name(x)));
            const int drop = x.dim - hx.dim;
            std::vector<FaceRef> live;
            for (FaceRef dd : p.delta_faces(x)) {
                FaceRef hd = q.face(assign.at(p.name(dd)));
                if (hd.dim == dd.dim) live.push_back(hd);
            }
            if (drop == 0) {
                std::set<int> img, want(q.delta(hx).begin(), q.delta(hx).end());
                bool inj = true;
                for (FaceRef l : live)
                    if (!img.insert(l.idx).second) inj = false;
                if (!inj || img != want) return false;
            } else if (drop == 1) {
                if (live.size() != 1 || live[0] != hx) return false;
            } else {
                if (!live.empty()) return false;
            }
        }
        // Epi coverage at this dimension.
        for (int iq = 0; iq < q.count(d); ++iq) {
            bool covered = false;
            for (int ip = 0; ip < p.count(d) && !covered; ++ip)
                covered = assign.at(p.faces(d)[ip]) == q.faces(d)[iq];
            if (!covered) return false;
        }
        return true;
    }

    void assign_dim(int d) {
        if (d < 0) {
            IotaMap m{p, q, assign};
            IotaReport rep = validate_iota_map(m);
            if (rep.report.ok() && rep.epi) out.push_back(std::move(m));
            return;
        }
        // Forced values: x = gamma(y) for y one dimension up.
        std::map<std::string, std::string> forced;
        for (int i = 0; i < p.count(d + 1); ++i) {
            FaceRef y{d + 1, i};
            FaceRef hy = q.face(assign.at(p.name(y)));
            std::string want = q.name(q.gamma_iter(hy, d));
            auto [it, fresh] = forced.emplace(p.name(p.gamma(y)), want);
            if (!fresh && it->second != want) return;  // inconsistent forcings
        }
        std::vector<int> free;
        for (int i = 0; i < p.count(d); ++i)
            if (!forced.count(p.faces(d)[i])) free.push_back(i);

        std::vector<FaceRef> candidates;
        for (int k = 0; k <= d; ++k)
            for (int i = 0; i < q.count(k); ++i) candidates.push_back({k, i});

        std::function<void(size_t)> pick = [&](size_t fi) {
            if (fi == free.size()) {
                for (const auto& [k, v] : forced) assign[k] = v;
                if (dim_done_checks(d)) assign_dim(d - 1);
                for (const auto& [k, _] : forced) assign.erase(k);
                return;
            }
            const std::string& name = p.faces(d)[free[fi]];
            for (FaceRef c : candidates) {
                assign[name] = q.name(c);
                pick(fi + 1);
            }
            assign.erase(name);
        };
        pick(0);
    }
};

}  // namespace

std::vector<IotaMap> enumerate_iota_epis(const Hypergraph& p, const Hypergraph& q) {
    if (!p.is_opetope() || !q.is_opetope())
        throw std::invalid_argument("enumerate_iota_epis: both endpoints must be positive opetopes");
    std::vector<IotaMap> out;
    EpiSearch search{p, q, out, {}};
    search.assign_dim(p.dim());
    return out;
}

}  // namespace ope
