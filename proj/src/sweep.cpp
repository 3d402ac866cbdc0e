#include "ope/sweep.hpp"

#include <algorithm>
#include <set>

namespace ope {
namespace sweep {

std::vector<Outcome> run(const std::vector<std::string>& items,
                         const std::function<std::vector<std::string>(int)>& check, Exec mode) {
    std::vector<Outcome> out(items.size());
    const int n = static_cast<int>(items.size());
    if (mode == Exec::Parallel) {
#ifdef OPE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i) out[i] = Outcome{items[i], check(i)};
    } else {
        for (int i = 0; i < n; ++i) out[i] = Outcome{items[i], check(i)};
    }
    return out;
}

std::vector<std::string> roundtrip_failures(const Complex& c) {
    std::vector<std::string> fails;
    try {
        Hypergraph dual = dualize_complex(c);
        if (c.kind == ComplexKind::Tree && !dual.is_opetope())
            fails.push_back("dual is not a positive opetope: " +
                            dual.classification().axioms.summary());
        if (c.kind == ComplexKind::Thicket && !dual.is_cardinal())
            fails.push_back("dual is not an opetopic cardinal: " +
                            dual.classification().axioms.summary());
        eta_iso(c);
        epsilon_iso(dual);
    } catch (const std::exception& e) {
        fails.push_back(e.what());
    }
    return fails;
}

std::vector<std::string> order_lemma_failures(const Hypergraph& p) {
    std::vector<std::string> fails;
    try {
        epsilon_iso(p);  // includes the order-isomorphism onto (P_i, <+)
    } catch (const std::exception& e) {
        fails.push_back(e.what());
    }

    // p <- p' iff gamma(p) <+ gamma(p') on P_{i+1} - gamma(P_{i+2}).
    for (int i = 0; i + 1 <= p.dim(); ++i) {
        std::vector<bool> img = p.gamma_image(i + 1);
        for (int a = 0; a < p.count(i + 1); ++a)
            for (int b = 0; b < p.count(i + 1); ++b) {
                if (a == b || img[a] || img[b]) continue;
                FaceRef fa{i + 1, a}, fb{i + 1, b};
                if (p.lower_lt(fa, fb) != p.upper_lt(p.gamma(fa), p.gamma(fb)))
                    fails.push_back("codomain-order equivalence fails for '" + p.name(fa) + "', '" +
                                    p.name(fb) + "'");
            }
    }

    // pi / leaf-set correspondence, root law gamma gamma(p) = gamma(p_root).
    try {
        Complex dual = dualize_opetope(p);
        std::vector<ConstellationOrder> ct;
        for (int i = 0; i <= dual.dim(); ++i) ct.push_back(complex_order_at(dual, i));
        for (int i = 0; i + 1 <= dual.dim(); ++i) {
            const Poset& upper = dual.levels[i + 1];
            const Poset& lower = dual.levels[i];
            for (int u = 0; u < upper.size(); ++u) {
                const std::vector<int>& pi = dual.sigmas[i][u];
                ConvexSubtree cs;
                if (!validate_convex_subtree(lower, pi, &cs).ok()) {
                    fails.push_back("pi(" + upper.name(u) + ") is not a convex subtree");
                    continue;
                }
                FaceRef pf = p.face(upper.name(u));
                FaceRef root = p.face(lower.name(cs.root));
                if (i >= 1 && p.gamma(p.gamma(pf)) != p.gamma(root))
                    fails.push_back("gamma gamma(" + upper.name(u) + ") != gamma(pi-root)");
                // leaves over the circle are exactly the pi-members as vertices
                std::vector<int> lvs = leaves_over(ct[i].poset, ct[i].circle(u));
                std::vector<int> want;
                for (int s : pi) want.push_back(ct[i].vertex(s));
                std::sort(lvs.begin(), lvs.end());
                std::sort(want.begin(), want.end());
                if (lvs != want)
                    fails.push_back("leaf set of '" + upper.name(u) + "' differs from pi");
                if (i >= 1) {
                    // the reinterpretation into the next column down is an order iso
                    for (int s1 : pi)
                        for (int s2 : pi) {
                            bool low = lower.lt(s1, s2);
                            bool circ = ct[i - 1].poset.lt(ct[i - 1].circle(s1), ct[i - 1].circle(s2));
                            if (low != circ)
                                fails.push_back("xi is not an order isomorphism at '" +
                                                upper.name(u) + "'");
                        }
                }
            }
        }
    } catch (const std::exception& e) {
        fails.push_back(e.what());
    }

    // Path Lemma items 1-3 for every maximal lower path and valid anchor.
    for (int n = 1; n <= p.dim(); ++n)
        for (const auto& path : maximal_lower_paths(p, n))
            for (int bi = 0; bi < p.count(n); ++bi)
                for (int s = 0; s < static_cast<int>(path.size()); ++s) {
                    FaceRef b{n, bi};
                    if (!p.upper_lt(path[s], b)) continue;
                    PathLemmaResult r = check_path_lemma(p, path, b, s);
                    if (!r.item1 || !r.item2 || !r.item3)
                        fails.push_back("path lemma items 1-3 fail at dim " + std::to_string(n) +
                                        ", b='" + p.name(b) + "', s=" + std::to_string(s));
                }
    return fails;
}

std::vector<std::string> iota_epi_failures(const IotaMap& m) {
    std::vector<std::string> fails;
    IotaReport rep = validate_iota_map(m);
    if (!rep.report.ok()) {
        fails.push_back("iota validation: " + rep.report.summary());
        return fails;
    }
    std::set<std::string> kernel(rep.kernel.begin(), rep.kernel.end());
    for (int k = 0; k <= m.source.dim(); ++k)
        for (int a = 0; a < m.source.count(k); ++a)
            for (int b = 0; b < m.source.count(k); ++b) {
                FaceRef q1{k, a}, q2{k, b};
                if (a == b || kernel.count(m.source.name(q1)) || kernel.count(m.source.name(q2)))
                    continue;
                FaceRef h1 = m.apply(q1), h2 = m.apply(q2);
                if (m.source.lower_lt(q1, q2) != m.target.lower_lt(h1, h2))
                    fails.push_back("item 1 fails at '" + m.source.name(q1) + "', '" +
                                    m.source.name(q2) + "'");
                if (m.source.upper_lt(q1, q2) && !(h1 == h2 || m.target.upper_lt(h1, h2)))
                    fails.push_back("item 2 fails at '" + m.source.name(q1) + "', '" +
                                    m.source.name(q2) + "'");
                if (m.target.upper_lt(h1, h2) && !m.source.upper_lt(q1, q2))
                    fails.push_back("item 3 fails at '" + m.source.name(q1) + "', '" +
                                    m.source.name(q2) + "'");
                if (h1 == h2 && !m.source.upper_perp(q1, q2))
                    fails.push_back("item 4 fails at '" + m.source.name(q1) + "', '" +
                                    m.source.name(q2) + "'");
            }

    // Interval fibers.
    for (int k = 0; k <= m.target.dim(); ++k)
        for (int pi = 0; pi < m.target.count(k); ++pi) {
            FaceRef pf{k, pi};
            std::vector<FaceRef> fiber;
            for (int a = 0; a < m.source.count(k); ++a) {
                FaceRef q{k, a};
                if (!kernel.count(m.source.name(q)) && m.apply(q) == pf) fiber.push_back(q);
            }
            if (fiber.empty()) continue;
            for (size_t i = 0; i < fiber.size(); ++i)
                for (size_t j = i + 1; j < fiber.size(); ++j)
                    if (!m.source.upper_perp(fiber[i], fiber[j]))
                        fails.push_back("fiber over '" + m.target.name(pf) + "' is not a chain");
            FaceRef lo = fiber[0], hi = fiber[0];
            for (FaceRef q : fiber) {
                if (m.source.upper_lt(q, lo)) lo = q;
                if (m.source.upper_lt(hi, q)) hi = q;
            }
            for (int a = 0; a < m.source.count(k); ++a) {
                FaceRef z{k, a};
                bool inside = (z == lo || m.source.upper_lt(lo, z)) &&
                              (z == hi || m.source.upper_lt(z, hi));
                bool member = std::find(fiber.begin(), fiber.end(), z) != fiber.end();
                if (inside && !member)
                    fails.push_back("fiber over '" + m.target.name(pf) + "' is not an interval ('" +
                                    m.source.name(z) + "' sits inside)");
            }
        }
    return fails;
}

std::vector<std::string> omega_failures(const Hypergraph& h, int max_level, IotaConvention conv) {
    std::vector<std::string> fails;
    try {
        ValidationReport rep = check_omega_laws(h, max_level, conv);
        for (const auto& issue : rep.issues()) fails.push_back(issue.code + ": " + issue.detail);
    } catch (const std::exception& e) {
        fails.push_back(e.what());
    }
    return fails;
}

}  // namespace sweep
}  // namespace ope
