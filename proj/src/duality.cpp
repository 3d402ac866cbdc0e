#include "ope/duality.hpp"

#include <algorithm>
#include <set>

namespace ope {

std::pair<std::string, bool> split_marked(const std::string& name) {
    if (name.size() < 2 || name[name.size() - 2] != '~')
        throw std::invalid_argument("split_marked: '" + name + "' carries no ~v/~c marker");
    char m = name.back();
    if (m != 'v' && m != 'c')
        throw std::invalid_argument("split_marked: '" + name + "' carries no ~v/~c marker");
    return {name.substr(0, name.size() - 2), m == 'c'};
}

Complex dualize_opetope(const Hypergraph& h, DualityWitness* witness) {
    if (!h.is_cardinal())
        throw std::invalid_argument("dualize_opetope: input does not classify as an opetopic cardinal: " +
                                    h.classification().axioms.summary());
    const bool tree_kind = h.is_opetope();

    Complex out;
    out.kind = tree_kind ? ComplexKind::Tree : ComplexKind::Thicket;

    std::vector<std::vector<int>> carrier(h.dim() + 1);  // P_i - gamma(P_{i+1}) as face idxs
    for (int i = 0; i <= h.dim(); ++i) {
        std::vector<bool> img = h.gamma_image(i);
        for (int a = 0; a < h.count(i); ++a)
            if (!img[a]) carrier[i].push_back(a);
    }

    for (int i = 0; i <= h.dim(); ++i) {
        std::vector<std::string> names;
        for (int a : carrier[i]) names.push_back(h.faces(i)[a]);
        const int m = static_cast<int>(carrier[i].size());
        std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) lt[x][y] = h.lower_lt(i, carrier[i][x], carrier[i][y]);
        out.levels.push_back(Poset::from_relation(names, lt));
        if (tree_kind && !out.levels.back().is_tree())
            throw InternalError("dual of an opetope: level " + std::to_string(i) + " is not a tree");
        if (!tree_kind && !out.levels.back().is_thicket())
            throw InternalError("dual of a cardinal: level " + std::to_string(i) + " is not a thicket");
    }

    for (int i = 0; i + 1 <= h.dim(); ++i) {
        const Poset& lower = out.levels[i];
        const Poset& upper = out.levels[i + 1];
        std::vector<std::vector<int>> sigma(upper.size());
        for (int u = 0; u < upper.size(); ++u) {
            FaceRef p = h.face(upper.name(u));
            FaceRef gp = h.gamma(p);
            for (int s = 0; s < lower.size(); ++s)
                if (h.upper_lt(h.face(lower.name(s)), gp)) sigma[u].push_back(s);
            std::sort(sigma[u].begin(), sigma[u].end());
        }
        out.sigmas.push_back(std::move(sigma));
    }

    ValidationReport rep = validate_complex(out);
    if (!rep.ok())
        throw InternalError("dualize_opetope: result fails complex validation: " + rep.summary());

    if (witness) {
        witness->direction = DualityWitness::Direction::OpetopeToComplex;
        witness->levels.clear();
        for (const Poset& lv : out.levels) {
            std::vector<std::pair<std::string, std::string>> level;
            for (const std::string& n : lv.names()) level.emplace_back(n, n);
            witness->levels.push_back(std::move(level));
        }
    }
    return out;
}

ComplexMorphism dualize_iota_epi(const IotaMap& f) {
    IotaReport ir = validate_iota_map(f);
    if (!ir.report.ok())
        throw std::invalid_argument("dualize_iota_epi: invalid iota-map: " + ir.report.summary());
    if (!ir.epi) throw std::invalid_argument("dualize_iota_epi: the map is not an epimorphism");

    ComplexMorphism out;
    out.source = dualize_opetope(f.target);
    out.target = dualize_opetope(f.source);

    std::set<std::string> kernel(ir.kernel.begin(), ir.kernel.end());
    for (int i = 0; i <= out.source.dim(); ++i) {
        const Poset& qs = out.source.levels[i];
        const Poset& ps = out.target.levels[i];
        std::vector<int> map(qs.size(), -1);
        for (int q = 0; q < qs.size(); ++q) {
            FaceRef qf = f.target.face(qs.name(q));
            int found = -1;
            for (int p = 0; p < ps.size(); ++p)
                if (f.apply(f.source.face(ps.name(p))) == qf) {
                    if (found >= 0)
                        throw InternalError("dualize_iota_epi: preimage of '" + qs.name(q) +
                                            "' is not unique");
                    found = p;
                }
            if (found < 0)
                throw InternalError("dualize_iota_epi: no preimage for '" + qs.name(q) + "'");
            map[q] = found;

            // cross-check: the chosen preimage is the <+-least element of its fiber
            FaceRef pf = f.source.face(ps.name(found));
            for (int a = 0; a < f.source.count(i); ++a) {
                FaceRef other{i, a};
                if (kernel.count(f.source.name(other)) || f.apply(other) != qf) continue;
                if (other != pf && !f.source.upper_lt(pf, other))
                    throw InternalError("dualize_iota_epi: preimage of '" + qs.name(q) +
                                        "' is not the least element of its fiber");
            }
        }
        out.maps.push_back(std::move(map));
    }

    ValidationReport rep = validate_complex_morphism(out);
    if (!rep.ok())
        throw InternalError("dualize_iota_epi: dual is not a complex morphism: " + rep.summary());
    return out;
}

namespace {

struct DualFaces {
    std::vector<ConstellationOrder> ct;  // one per level, top level vertices-only
};

/// Leaves of CT_{i+1} over p, reinterpreted as the matching circles of CT_i.
std::vector<int> reinterpreted_leaves(const DualFaces& d, int i, int p_node) {
    const ConstellationOrder& up = d.ct[i + 1];
    const ConstellationOrder& low = d.ct[i];
    std::vector<int> out;
    for (int leaf : leaves_over(up.poset, p_node)) {
        if (up.nodes[leaf].kind != OrderNode::Vertex)
            throw InternalError("constellation-order leaf is not a vertex");
        out.push_back(low.circle(up.nodes[leaf].index));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Hypergraph dualize_complex(const Complex& s, DualityWitness* witness) {
    ValidationReport rep = validate_complex(s);
    if (!rep.ok())
        throw std::invalid_argument("dualize_complex: input does not validate: " + rep.summary());

    DualFaces d;
    for (int i = 0; i <= s.dim(); ++i) d.ct.push_back(complex_order_at(s, i));

    std::vector<std::vector<std::string>> faces;
    for (const ConstellationOrder& ct : d.ct) faces.push_back(ct.poset.names());

    std::map<std::string, std::string> gamma;
    std::map<std::string, std::vector<std::string>> delta;
    for (int i = 0; i + 1 <= s.dim(); ++i) {
        const ConstellationOrder& up = d.ct[i + 1];
        const ConstellationOrder& low = d.ct[i];
        for (int p = 0; p < up.poset.size(); ++p) {
            std::vector<int> lv = reinterpreted_leaves(d, i, p);
            std::string why;
            auto sup = low.poset.sup_set(lv, &why);
            if (!sup)
                throw InternalError("dualize_complex: gamma(" + up.poset.name(p) +
                                    ") has no sup: " + why);
            gamma[up.poset.name(p)] = low.poset.name(*sup);
            std::vector<int> cov;
            try {
                cov = cover_of(low.poset, lv);
            } catch (const std::invalid_argument& e) {
                throw InternalError(std::string("dualize_complex: leaf set not convex: ") + e.what());
            }
            if (cov.empty())
                throw InternalError("dualize_complex: delta(" + up.poset.name(p) + ") is empty");
            std::vector<std::string> ds;
            for (int x : cov) ds.push_back(low.poset.name(x));
            delta[up.poset.name(p)] = ds;
        }
    }

    Hypergraph out;
    try {
        out = Hypergraph(faces, gamma, delta);
    } catch (const std::invalid_argument& e) {
        throw InternalError(std::string("dualize_complex: malformed dual: ") + e.what());
    }

    const bool tree_kind = s.kind == ComplexKind::Tree;
    if (tree_kind && !out.is_opetope())
        throw InternalError("dualize_complex: dual of a tree complex must be a positive opetope: " +
                            out.classification().axioms.summary());
    if (!tree_kind && !out.is_cardinal())
        throw InternalError("dualize_complex: dual of a thicket complex must be a cardinal: " +
                            out.classification().axioms.summary());

    // Strictness step of the construction: <+ coincides with <co at each level.
    for (int i = 0; i <= s.dim(); ++i) {
        const Poset& ct = d.ct[i].poset;
        for (int a = 0; a < ct.size(); ++a)
            for (int b = 0; b < ct.size(); ++b) {
                FaceRef fa = out.face(ct.name(a)), fb = out.face(ct.name(b));
                if (ct.lt(a, b) != out.upper_lt(fa, fb))
                    throw InternalError("dualize_complex: derived <+ differs from the constellation "
                                        "order at dimension " +
                                        std::to_string(i));
            }
    }

    if (witness) {
        witness->direction = DualityWitness::Direction::ComplexToOpetope;
        witness->levels.clear();
        for (int i = 0; i <= s.dim(); ++i) {
            std::vector<std::pair<std::string, std::string>> level;
            for (int n = 0; n < d.ct[i].poset.size(); ++n) {
                const OrderNode& nd = d.ct[i].nodes[n];
                const std::string base = nd.kind == OrderNode::Vertex
                                             ? s.levels[i].name(nd.index)
                                             : s.levels[i + 1].name(nd.index);
                level.emplace_back(base, d.ct[i].poset.name(n));
            }
            witness->levels.push_back(std::move(level));
        }
    }
    return out;
}

IotaMap dualize_complex_morphism(const ComplexMorphism& f) {
    ValidationReport rep = validate_complex_morphism(f);
    if (!rep.ok())
        throw std::invalid_argument("dualize_complex_morphism: invalid morphism: " + rep.summary());

    IotaMap out;
    out.source = dualize_complex(f.target);
    out.target = dualize_complex(f.source);

    std::vector<ConstellationOrder> cts, ctt;  // source-complex orders, target-complex orders
    for (int i = 0; i <= f.source.dim(); ++i) cts.push_back(complex_order_at(f.source, i));
    for (int i = 0; i <= f.target.dim(); ++i) ctt.push_back(complex_order_at(f.target, i));

    // The induced node map on constellation orders, by marked name.
    auto vec_f = [&](int j, const std::string& marked) -> std::string {
        auto [base, is_circle] = split_marked(marked);
        if (is_circle) return circle_name(f.target.levels[j + 1].name(
            f.maps[j + 1][f.source.levels[j + 1].index_of(base)]));
        return vertex_name(f.target.levels[j].name(f.maps[j][f.source.levels[j].index_of(base)]));
    };

    for (int i = 0; i <= f.target.dim(); ++i) {
        for (const std::string& tname : out.source.faces(i)) {
            FaceRef t = out.source.face(tname);
            int assigned_j = -1;
            for (int j = i; j >= 0 && assigned_j < 0; --j) {
                if (j > f.source.dim()) continue;
                // delta gamma^(j+1)(t), read as {t} itself when j = dim(t).
                std::vector<int> targets;  // node indices in ctt[j]
                if (j == i) {
                    targets.push_back(ctt[i].poset.index_of(tname));
                } else {
                    FaceRef g = out.source.gamma_iter(t, j + 1);
                    for (FaceRef dd : out.source.delta_faces(g))
                        targets.push_back(ctt[j].poset.index_of(out.source.name(dd)));
                }
                std::vector<int> candidates;  // node indices in cts[j]
                for (int sn = 0; sn < cts[j].poset.size(); ++sn) {
                    std::string img = vec_f(j, cts[j].poset.name(sn));
                    int img_node = ctt[j].poset.index_of(img);
                    for (int u : targets)
                        if (ctt[j].poset.leq(img_node, u)) {
                            candidates.push_back(sn);
                            break;
                        }
                }
                if (candidates.empty()) continue;
                std::vector<int> maximal;
                for (int c : candidates) {
                    bool is_max = true;
                    for (int c2 : candidates)
                        if (c2 != c && cts[j].poset.lt(c, c2)) is_max = false;
                    if (is_max) maximal.push_back(c);
                }
                if (maximal.size() != 1)
                    throw InternalError("dualize_complex_morphism: the <=co-maximal candidate for '" +
                                        tname + "' is not unique");
                out.assignment[tname] = cts[j].poset.name(maximal[0]);
                assigned_j = j;
            }
            if (assigned_j < 0)
                throw InternalError("dualize_complex_morphism: no value found for '" + tname + "'");
        }
    }

    IotaReport ir = validate_iota_map(out);
    if (!ir.report.ok())
        throw InternalError("dualize_complex_morphism: dual fails iota validation: " +
                            ir.report.summary());
    if (!ir.epi) throw InternalError("dualize_complex_morphism: dual is not an epimorphism");
    return out;
}

NaturalIsoWitness eta_iso(const Complex& s) {
    ValidationReport rep = validate_complex(s);
    if (!rep.ok()) throw std::invalid_argument("eta_iso: input does not validate: " + rep.summary());

    Complex ss = dualize_opetope(dualize_complex(s));
    if (ss.dim() != s.dim()) throw InternalError("eta: dimension changed under the double dual");

    NaturalIsoWitness w;
    w.kind = NaturalIsoWitness::Kind::Eta;
    std::vector<std::vector<int>> maps(s.dim() + 1);
    for (int i = 0; i <= s.dim(); ++i) {
        const Poset& lv = s.levels[i];
        const Poset& lv2 = ss.levels[i];
        if (lv.size() != lv2.size())
            throw InternalError("eta: level " + std::to_string(i) + " changed size");
        std::map<std::string, std::string> comp;
        maps[i].assign(lv.size(), -1);
        for (int x = 0; x < lv.size(); ++x) {
            std::string img = vertex_name(lv.name(x));
            auto at = lv2.find(img);
            if (!at) throw InternalError("eta: '" + img + "' is not a double-dual node");
            maps[i][x] = *at;
            comp[lv.name(x)] = img;
        }
        if (!is_embedding(lv, lv2, maps[i]))
            throw InternalError("eta: level " + std::to_string(i) + " map is not an order isomorphism");
        w.components.push_back(std::move(comp));
    }

    // Commuting square: eta(sigma_i(u)) = sigma**_i(eta(u)).
    for (int i = 0; i + 1 <= s.dim(); ++i)
        for (int u = 0; u < s.levels[i + 1].size(); ++u) {
            std::vector<int> img;
            for (int low : s.sigmas[i][u]) img.push_back(maps[i][low]);
            std::sort(img.begin(), img.end());
            if (img != ss.sigmas[i][maps[i + 1][u]])
                throw InternalError("eta: sigma square does not commute at level " + std::to_string(i));
        }

    ComplexMorphism as_morphism{s, ss, maps};
    ValidationReport mrep = validate_complex_morphism(as_morphism);
    if (!mrep.ok()) throw InternalError("eta: witness is not a complex morphism: " + mrep.summary());
    return w;
}

NaturalIsoWitness epsilon_iso(const Hypergraph& p) {
    if (!p.is_cardinal())
        throw std::invalid_argument("epsilon_iso: input does not classify as a cardinal");

    Complex dual = dualize_opetope(p);
    Hypergraph pp = dualize_complex(dual);
    if (pp.dim() != p.dim()) throw InternalError("epsilon: dimension changed under the double dual");

    NaturalIsoWitness w;
    w.kind = NaturalIsoWitness::Kind::Epsilon;
    // eps(s~v) = s; eps(s~c) = gamma(s).
    for (int i = 0; i <= p.dim(); ++i) {
        std::map<std::string, std::string> comp;
        std::set<std::string> image;
        for (const std::string& n : pp.faces(i)) {
            auto [base, is_circle] = split_marked(n);
            std::string val = is_circle ? p.name(p.gamma(p.face(base))) : base;
            comp[n] = val;
            if (!image.insert(val).second)
                throw InternalError("epsilon: not one-to-one at dimension " + std::to_string(i));
        }
        if (static_cast<int>(image.size()) != p.count(i))
            throw InternalError("epsilon: not onto at dimension " + std::to_string(i));
        w.components.push_back(std::move(comp));
    }

    // Order isomorphism onto (P_i, <+).
    for (int i = 0; i <= p.dim(); ++i)
        for (const std::string& a : pp.faces(i))
            for (const std::string& b : pp.faces(i)) {
                bool dd = pp.upper_lt(pp.face(a), pp.face(b));
                bool orig = p.upper_lt(p.face(w.components[i].at(a)), p.face(w.components[i].at(b)));
                if (dd != orig)
                    throw InternalError("epsilon: not an order isomorphism at dimension " +
                                        std::to_string(i));
            }

    // gamma and delta preservation, all cases at once.
    for (int i = 1; i <= pp.dim(); ++i)
        for (const std::string& n : pp.faces(i)) {
            FaceRef x = pp.face(n);
            if (w.components[i - 1].at(pp.name(pp.gamma(x))) !=
                p.name(p.gamma(p.face(w.components[i].at(n)))))
                throw InternalError("epsilon: gamma not preserved at '" + n + "'");
            std::set<std::string> lhs, rhs;
            for (FaceRef d : pp.delta_faces(x)) lhs.insert(w.components[i - 1].at(pp.name(d)));
            for (FaceRef d : p.delta_faces(p.face(w.components[i].at(n)))) rhs.insert(p.name(d));
            if (lhs != rhs) throw InternalError("epsilon: delta not preserved at '" + n + "'");
        }
    return w;
}

}  // namespace ope
