#include "ope/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ope {

Hypergraph::Hypergraph(std::vector<std::vector<std::string>> faces,
                       const std::map<std::string, std::string>& gamma,
                       const std::map<std::string, std::vector<std::string>>& delta) {
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    for (size_t k = 0; k < faces.size(); ++k)
        if (faces[k].empty())
            throw std::invalid_argument("hypergraph: empty dimension " + std::to_string(k) +
                                        " below a nonempty one");
    faces_ = std::move(faces);
    for (auto& level : faces_) std::sort(level.begin(), level.end());
    for (int k = 0; k <= dim(); ++k)
        for (int i = 0; i < count(k); ++i) {
            const std::string& n = faces_[k][i];
            if (n.empty()) throw std::invalid_argument("hypergraph: empty face name");
            if (!index_.emplace(n, FaceRef{k, i}).second)
                throw std::invalid_argument("hypergraph: duplicate face name '" + n + "'");
        }

    gamma_.assign(std::max(dim(), 0), {});
    delta_.assign(std::max(dim(), 0), {});
    for (int k = 0; k + 1 <= dim(); ++k) {
        gamma_[k].assign(count(k + 1), -1);
        delta_[k].assign(count(k + 1), {});
        for (int i = 0; i < count(k + 1); ++i) {
            const std::string& n = faces_[k + 1][i];
            auto g = gamma.find(n);
            if (g == gamma.end())
                throw std::invalid_argument("hypergraph: gamma missing for '" + n + "'");
            auto gi = index_.find(g->second);
            if (gi == index_.end() || gi->second.dim != k)
                throw std::invalid_argument("hypergraph: gamma(" + n +
                                            ") must be a face one dimension below");
            gamma_[k][i] = gi->second.idx;

            auto d = delta.find(n);
            if (d == delta.end() || d->second.empty())
                throw std::invalid_argument("hypergraph: delta missing or empty for '" + n + "'");
            std::set<int> ds;
            for (const std::string& m : d->second) {
                auto mi = index_.find(m);
                if (mi == index_.end() || mi->second.dim != k)
                    throw std::invalid_argument("hypergraph: delta(" + n + ") entry '" + m +
                                                "' is not a face one dimension below");
                if (!ds.insert(mi->second.idx).second)
                    throw std::invalid_argument("hypergraph: duplicate delta entry '" + m +
                                                "' for '" + n + "'");
            }
            if (k == 0 && ds.size() != 1)
                throw std::invalid_argument("hypergraph: delta at dimension 0 must be single-valued ('" +
                                            n + "')");
            delta_[k][i].assign(ds.begin(), ds.end());
        }
    }
    for (const auto& [name, _] : gamma)
        if (!index_.count(name) || index_.at(name).dim == 0)
            throw std::invalid_argument("hypergraph: gamma keyed by unknown or 0-dimensional face '" +
                                        name + "'");
    for (const auto& [name, _] : delta)
        if (!index_.count(name) || index_.at(name).dim == 0)
            throw std::invalid_argument("hypergraph: delta keyed by unknown or 0-dimensional face '" +
                                        name + "'");
    close_orders();
    class_ = classify();
}

FaceRef Hypergraph::face(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::out_of_range("hypergraph: face not found: '" + n + "'");
    return it->second;
}

std::optional<FaceRef> Hypergraph::find(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<FaceRef> Hypergraph::all_faces() const {
    std::vector<FaceRef> out;
    for (int k = 0; k <= dim(); ++k)
        for (int i = 0; i < count(k); ++i) out.push_back({k, i});
    return out;
}

FaceRef Hypergraph::gamma(FaceRef f) const {
    if (f.dim < 1) throw std::out_of_range("gamma: face of dimension 0");
    return {f.dim - 1, gamma_[f.dim - 1][f.idx]};
}

const std::vector<int>& Hypergraph::delta(FaceRef f) const {
    if (f.dim < 1) throw std::out_of_range("delta: face of dimension 0");
    return delta_[f.dim - 1][f.idx];
}

std::vector<FaceRef> Hypergraph::delta_faces(FaceRef f) const {
    std::vector<FaceRef> out;
    for (int i : delta(f)) out.push_back({f.dim - 1, i});
    return out;
}

FaceRef Hypergraph::gamma_iter(FaceRef p, int k) const {
    while (p.dim > k) p = gamma(p);
    return p;
}

bool Hypergraph::lower_lt(FaceRef a, FaceRef b) const {
    return a.dim == b.dim && lower_[a.dim][a.idx][b.idx];
}
bool Hypergraph::upper_lt(FaceRef a, FaceRef b) const {
    return a.dim == b.dim && upper_[a.dim][a.idx][b.idx];
}
bool Hypergraph::lower_perp(FaceRef a, FaceRef b) const { return lower_lt(a, b) || lower_lt(b, a); }
bool Hypergraph::upper_perp(FaceRef a, FaceRef b) const { return upper_lt(a, b) || upper_lt(b, a); }

std::vector<bool> Hypergraph::gamma_image(int k) const {
    std::vector<bool> img(count(k), false);
    if (k + 1 <= dim())
        for (int i = 0; i < count(k + 1); ++i) img[gamma_[k][i]] = true;
    return img;
}

void Hypergraph::close_orders() {
    auto closure = [](std::vector<std::vector<bool>>& m) {
        const int n = static_cast<int>(m.size());
        for (int z = 0; z < n; ++z)
            for (int a = 0; a < n; ++a)
                if (m[a][z])
                    for (int b = 0; b < n; ++b)
                        if (m[z][b]) m[a][b] = true;
    };
    lower_.assign(dim() + 1, {});
    upper_.assign(dim() + 1, {});
    for (int k = 0; k <= dim(); ++k) {
        const int n = count(k);
        lower_[k].assign(n, std::vector<bool>(n, false));
        upper_[k].assign(n, std::vector<bool>(n, false));
        if (k >= 1)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    // a -< b iff gamma(a) in delta(b); self-steps witness
                    // non-strictness and must not be dropped
                    int ga = gamma_[k - 1][a];
                    const auto& db = delta_[k - 1][b];
                    if (std::binary_search(db.begin(), db.end(), ga)) lower_[k][a][b] = true;
                }
        if (k + 1 <= dim())
            for (int al = 0; al < count(k + 1); ++al) {
                int b = gamma_[k][al];
                for (int a : delta_[k][al]) upper_[k][a][b] = true;
            }
        closure(lower_[k]);
        closure(upper_[k]);
    }
}

Classification Hypergraph::classify() const {
    Classification out;
    ValidationReport& rep = out.axioms;
    if (empty()) {
        rep.fail("empty", "a positive opetopic cardinal is nonempty");
        out.kind = HypergraphClass::Hypergraph;
        return out;
    }

    for (int n = 0; n <= dim(); ++n) {
        std::set<int> in_delta;
        if (n + 1 <= dim())
            for (const auto& d : delta_[n]) in_delta.insert(d.begin(), d.end());
        out.size.push_back(count(n) - static_cast<int>(in_delta.size()));
    }

    // Globularity
    for (int k = 2; k <= dim(); ++k)
        for (int i = 0; i < count(k); ++i) {
            FaceRef a{k, i};
            std::set<int> gd, dd;
            for (int d : delta(a)) {
                gd.insert(gamma_[k - 2][d]);
                const auto& dd2 = delta_[k - 2][d];
                dd.insert(dd2.begin(), dd2.end());
            }
            int gg = gamma_[k - 2][gamma_[k - 1][i]];
            std::set<int> dg(delta_[k - 2][gamma_[k - 1][i]].begin(),
                             delta_[k - 2][gamma_[k - 1][i]].end());
            std::set<int> gd_minus_dd, dd_minus_gd;
            for (int x : gd)
                if (!dd.count(x)) gd_minus_dd.insert(x);
            for (int x : dd)
                if (!gd.count(x)) dd_minus_gd.insert(x);
            if (gd_minus_dd != std::set<int>{gg})
                rep.fail("globularity",
                         "gamma gamma(" + name(a) + ") != gamma delta - delta delta");
            if (dd_minus_gd != dg)
                rep.fail("globularity",
                         "delta gamma(" + name(a) + ") != delta delta - gamma delta");
        }

    // Strictness
    for (int k = 0; k <= dim(); ++k)
        for (int i = 0; i < count(k); ++i)
            if (upper_[k][i][i])
                rep.fail("strictness", "<+ has a cycle through '" + faces_[k][i] + "'");
    for (int i = 0; i < count(0); ++i)
        for (int j = i + 1; j < count(0); ++j)
            if (!upper_[0][i][j] && !upper_[0][j][i])
                rep.fail("strictness", "<+ on dimension 0 is not linear: '" + faces_[0][i] +
                                           "' vs '" + faces_[0][j] + "'");

    // Disjointness
    for (int k = 1; k <= dim(); ++k)
        for (int i = 0; i < count(k); ++i)
            for (int j = 0; j < count(k); ++j)
                if ((lower_[k][i][j] || lower_[k][j][i]) && (upper_[k][i][j] || upper_[k][j][i])) {
                    rep.fail("disjointness", "faces '" + faces_[k][i] + "' and '" + faces_[k][j] +
                                                 "' are related in both orders");
                    j = count(k);
                    i = count(k);
                }

    // Pencil linearity
    for (int k = 1; k <= dim(); ++k)
        for (int x = 0; x < count(k - 1); ++x) {
            std::vector<int> gp, dp;
            for (int a = 0; a < count(k); ++a) {
                if (gamma_[k - 1][a] == x) gp.push_back(a);
                const auto& d = delta_[k - 1][a];
                if (std::binary_search(d.begin(), d.end(), x)) dp.push_back(a);
            }
            auto linear = [&](const std::vector<int>& pencil) {
                for (size_t i = 0; i < pencil.size(); ++i)
                    for (size_t j = i + 1; j < pencil.size(); ++j)
                        if (!upper_[k][pencil[i]][pencil[j]] && !upper_[k][pencil[j]][pencil[i]])
                            return false;
                return true;
            };
            if (!linear(gp))
                rep.fail("pencil-linearity", "gamma-pencil of '" + faces_[k - 1][x] + "' is not a chain");
            if (!linear(dp))
                rep.fail("pencil-linearity", "delta-pencil of '" + faces_[k - 1][x] + "' is not a chain");
        }

    if (!rep.ok()) {
        out.kind = HypergraphClass::Hypergraph;
        return out;
    }
    bool opetope = true;
    for (int s : out.size)
        if (s > 1) opetope = false;
    out.kind = opetope ? HypergraphClass::PositiveOpetope : HypergraphClass::OpetopicCardinal;
    return out;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
    return faces_ == other.faces_ && gamma_ == other.gamma_ && delta_ == other.delta_;
}

Classification classify_hypergraph(const Hypergraph& h) { return h.classification(); }

OrderRelation order(const Hypergraph& h, int k, OrderKind kind) {
    if (k < 0 || k > h.dim()) throw std::out_of_range("order: dimension out of range");
    OrderRelation out;
    out.dimension = k;
    out.kind = kind;
    for (int a = 0; a < h.count(k); ++a)
        for (int b = 0; b < h.count(k); ++b) {
            bool rel = kind == OrderKind::Lower ? h.lower_lt(k, a, b) : h.upper_lt(k, a, b);
            if (rel) out.pairs.emplace_back(h.faces(k)[a], h.faces(k)[b]);
        }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

FaceRef gamma_iter(const Hypergraph& h, FaceRef p, int k) { return h.gamma_iter(p, k); }

std::optional<std::vector<FaceRef>> find_upper_path(const Hypergraph& h, FaceRef a, FaceRef b) {
    if (a.dim != b.dim) throw std::invalid_argument("find_upper_path: faces of different dimensions");
    if (a == b) return std::nullopt;
    const int n = a.dim;
    if (n + 1 > h.dim()) return std::nullopt;
    std::vector<bool> allowed(h.count(n + 1), true);
    if (n + 2 <= h.dim())
        for (int i = 0; i < h.count(n + 2); ++i) allowed[h.gamma(FaceRef{n + 2, i}).idx] = false;

    // Breadth-first search over faces of dimension n+1 linked by
    // gamma(prev) in delta(next), starting from those with a in delta.
    std::vector<int> parent(h.count(n + 1), -2);  // -2 unseen, -1 start
    std::vector<int> queue;
    for (int i = 0; i < h.count(n + 1); ++i) {
        if (!allowed[i]) continue;
        const auto& d = h.delta(FaceRef{n + 1, i});
        if (std::binary_search(d.begin(), d.end(), a.idx)) {
            parent[i] = -1;
            queue.push_back(i);
        }
    }
    std::sort(queue.begin(), queue.end());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        FaceRef curf{n + 1, cur};
        if (h.gamma(curf).idx == b.idx) {
            std::vector<FaceRef> path;
            for (int x = cur; x != -1; x = parent[x]) path.push_back({n + 1, x});
            std::reverse(path.begin(), path.end());
            path.insert(path.begin(), a);
            path.push_back(b);
            return path;
        }
        int g = h.gamma(curf).idx;
        for (int j = 0; j < h.count(n + 1); ++j) {
            if (!allowed[j] || parent[j] != -2) continue;
            const auto& d = h.delta(FaceRef{n + 1, j});
            if (std::binary_search(d.begin(), d.end(), g)) {
                parent[j] = cur;
                queue.push_back(j);
            }
        }
    }
    return std::nullopt;
}

std::vector<int> iota_set(const Hypergraph& h, int dim, const std::vector<int>& xs,
                          IotaConvention conv) {
    std::set<int> out;
    if (dim < 2) return {};
    if (conv == IotaConvention::Facewise) {
        for (int x : xs) {
            FaceRef f{dim, x};
            std::set<int> gd, dd;
            for (FaceRef d : h.delta_faces(f)) {
                gd.insert(h.gamma(d).idx);
                for (int e : h.delta(d)) dd.insert(e);
            }
            for (int v : gd)
                if (dd.count(v)) out.insert(v);
        }
    } else {
        std::set<int> gd, dd;
        for (int x : xs) {
            FaceRef f{dim, x};
            for (FaceRef d : h.delta_faces(f)) {
                gd.insert(h.gamma(d).idx);
                for (int e : h.delta(d)) dd.insert(e);
            }
        }
        for (int v : gd)
            if (dd.count(v)) out.insert(v);
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<FaceRef>> maximal_lower_paths(const Hypergraph& h, int n) {
    std::vector<std::vector<FaceRef>> out;
    if (n < 0 || n > h.dim()) return out;
    const int cnt = h.count(n);
    auto step = [&](int a, int b) {  // a -< b: gamma(a) in delta(b)
        if (n == 0) return false;
        int ga = h.gamma(FaceRef{n, a}).idx;
        const auto& db = h.delta(FaceRef{n, b});
        return std::binary_search(db.begin(), db.end(), ga);
    };
    std::vector<int> cur;
    std::function<void(int)> extend = [&](int last) {
        bool extended = false;
        for (int nxt = 0; nxt < cnt; ++nxt)
            if (step(last, nxt)) {
                extended = true;
                cur.push_back(nxt);
                extend(nxt);
                cur.pop_back();
            }
        if (!extended) {
            std::vector<FaceRef> path;
            for (int i : cur) path.push_back({n, i});
            out.push_back(path);
        }
    };
    for (int s = 0; s < cnt; ++s) {
        bool has_pred = false;
        for (int p = 0; p < cnt && !has_pred; ++p) has_pred = step(p, s);
        if (has_pred) continue;  // not a possible start of a maximal path
        cur = {s};
        extend(s);
    }
    return out;
}

PathLemmaResult check_path_lemma(const Hypergraph& h, const std::vector<FaceRef>& path, FaceRef b,
                                 int s, IotaConvention conv) {
    if (path.empty()) throw std::invalid_argument("check_path_lemma: empty path");
    const int n = path[0].dim;
    if (b.dim != n) throw std::invalid_argument("check_path_lemma: b has the wrong dimension");
    if (s < 0 || s >= static_cast<int>(path.size()))
        throw std::invalid_argument("check_path_lemma: index out of range");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& d = h.delta(path[i + 1]);
        if (!std::binary_search(d.begin(), d.end(), h.gamma(path[i]).idx))
            throw std::invalid_argument("check_path_lemma: not a lower path at step " +
                                        std::to_string(i));
    }
    {
        // maximality at both ends
        for (int x = 0; x < h.count(n); ++x) {
            const auto& d0 = h.delta(path.front());
            if (n >= 1 && std::binary_search(d0.begin(), d0.end(), h.gamma(FaceRef{n, x}).idx))
                throw std::invalid_argument("check_path_lemma: path extends on the left");
        }
        int gl = n >= 1 ? h.gamma(path.back()).idx : -1;
        for (int x = 0; x < h.count(n); ++x) {
            if (n < 1) break;
            const auto& dx = h.delta(FaceRef{n, x});
            if (std::binary_search(dx.begin(), dx.end(), gl))
                throw std::invalid_argument("check_path_lemma: path extends on the right");
        }
    }
    if (!h.upper_lt(path[s], b))
        throw std::invalid_argument("check_path_lemma: path[s] <+ b fails");

    const int k = static_cast<int>(path.size()) - 1;
    auto items = [&](int l, int p, PathLemmaResult& r) {
        r.l = l;
        r.p = p;
        r.item1 = true;
        for (int i = l; i <= p; ++i)
            if (!h.upper_lt(path[i], b)) r.item1 = false;
        r.item2 = h.gamma(path[p]) == h.gamma(b);
        if (l == 0) {
            const auto& d0 = h.delta(path[0]);
            const auto& db = h.delta(b);
            r.item3 = std::includes(db.begin(), db.end(), d0.begin(), d0.end());
        } else {
            const auto& db = h.delta(b);
            r.item3 = std::binary_search(db.begin(), db.end(), h.gamma(path[l - 1]).idx);
        }
        // iota over the whole structure at the path's dimension + 1
        std::vector<int> xs;
        if (n + 1 <= h.dim())
            for (int i = 0; i < h.count(n + 1); ++i) xs.push_back(i);
        std::vector<int> io = iota_set(h, n + 1, xs, conv);
        r.item4 = true;
        for (int i = l; i < p; ++i)
            if (!std::binary_search(io.begin(), io.end(), h.gamma(path[i]).idx)) r.item4 = false;
        return r.item1 && r.item2 && r.item3;
    };

    // Primary witness: the maximal contiguous block around s with a_i <+ b.
    int l = s, p = s;
    while (l > 0 && h.upper_lt(path[l - 1], b)) --l;
    while (p + 1 <= k && h.upper_lt(path[p + 1], b)) ++p;
    PathLemmaResult res;
    if (items(l, p, res)) return res;

    // Fall back to searching sub-intervals containing s.
    for (int l2 = l; l2 <= s; ++l2)
        for (int p2 = p; p2 >= s; --p2) {
            if (l2 == l && p2 == p) continue;
            PathLemmaResult r2;
            if (items(l2, p2, r2)) {
                r2.witness_searched = true;
                return r2;
            }
        }
    return res;  // items flags show what failed
}

std::vector<std::vector<int>> face_closure(const Hypergraph& h, const std::vector<FaceRef>& seeds) {
    std::vector<std::set<int>> got(h.dim() + 1);
    std::vector<FaceRef> stack(seeds);
    while (!stack.empty()) {
        FaceRef f = stack.back();
        stack.pop_back();
        if (got[f.dim].count(f.idx)) continue;
        got[f.dim].insert(f.idx);
        if (f.dim >= 1) {
            stack.push_back(h.gamma(f));
            for (FaceRef d : h.delta_faces(f)) stack.push_back(d);
        }
    }
    std::vector<std::vector<int>> out(h.dim() + 1);
    for (int k = 0; k <= h.dim(); ++k) out[k].assign(got[k].begin(), got[k].end());
    return out;
}

Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<std::vector<int>>& carrier) {
    std::vector<std::vector<std::string>> faces;
    std::map<std::string, std::string> gamma;
    std::map<std::string, std::vector<std::string>> delta;
    for (size_t k = 0; k < carrier.size(); ++k) {
        std::vector<std::string> level;
        for (int i : carrier[k]) {
            FaceRef f{static_cast<int>(k), i};
            level.push_back(h.name(f));
            if (k >= 1) {
                gamma[h.name(f)] = h.name(h.gamma(f));
                std::vector<std::string> ds;
                for (FaceRef d : h.delta_faces(f)) ds.push_back(h.name(d));
                delta[h.name(f)] = ds;
            }
        }
        faces.push_back(level);
    }
    return Hypergraph(faces, gamma, delta);  // construction re-checks closure
}

Hypergraph principal_sub(const Hypergraph& h, FaceRef x) {
    return sub_hypergraph(h, face_closure(h, {x}));
}

}  // namespace ope
