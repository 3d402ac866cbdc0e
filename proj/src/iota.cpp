#include "ope/iota.hpp"

#include <algorithm>
#include <set>

namespace ope {

IotaMap identity_iota(const Hypergraph& h) {
    IotaMap m;
    m.source = h;
    m.target = h;
    for (FaceRef f : h.all_faces()) m.assignment[h.name(f)] = h.name(f);
    return m;
}

IotaReport validate_iota_map(const IotaMap& m) {
    IotaReport out;
    ValidationReport& rep = out.report;

    for (FaceRef f : m.source.all_faces())
        if (!m.assignment.count(m.source.name(f))) {
            rep.fail("map-not-total", "no value for face '" + m.source.name(f) + "'");
            return out;
        }
    for (const auto& [k, v] : m.assignment) {
        if (!m.source.find(k)) {
            rep.fail("unknown-element", "assignment keyed by unknown face '" + k + "'");
            return out;
        }
        if (!m.target.find(v)) {
            rep.fail("unknown-element", "assignment hits unknown face '" + v + "'");
            return out;
        }
    }

    std::set<std::string> kernel;
    for (FaceRef q : m.source.all_faces()) {
        FaceRef hq = m.apply(q);
        if (hq.dim > q.dim)
            rep.fail("dimension-raised", "'" + m.source.name(q) + "' maps to a higher-dimensional face");
        out.collapse_degree[m.source.name(q)] = q.dim - hq.dim;
        if (hq.dim < q.dim) kernel.insert(m.source.name(q));
    }
    if (!rep.ok()) return out;
    out.kernel.assign(kernel.begin(), kernel.end());

    auto in_kernel = [&](FaceRef q) { return kernel.count(m.source.name(q)) != 0; };

    // Codomain preservation: h(gamma(q)) = gamma^(dim q - 1)(h(q)).
    for (FaceRef q : m.source.all_faces()) {
        if (q.dim < 1) continue;
        FaceRef lhs = m.apply(m.source.gamma(q));
        FaceRef rhs = m.target.gamma_iter(m.apply(q), q.dim - 1);
        if (lhs != rhs)
            rep.fail("codomain-not-preserved", "h(gamma(" + m.source.name(q) + ")) = " +
                                                   m.target.name(lhs) + " but gamma(h) gives " +
                                                   m.target.name(rhs));
    }

    // Domain clauses.
    for (FaceRef q : m.source.all_faces()) {
        if (q.dim < 1) continue;
        FaceRef hq = m.apply(q);
        std::vector<FaceRef> live;  // delta(q) - ker(h)
        for (FaceRef d : m.source.delta_faces(q))
            if (!in_kernel(d)) live.push_back(d);
        const int drop = q.dim - hq.dim;
        if (drop == 0) {
            std::set<int> img, want(m.target.delta(hq).begin(), m.target.delta(hq).end());
            bool inj = true;
            for (FaceRef d : live)
                if (!img.insert(m.apply(d).idx).second) inj = false;
            if (!inj || img != want)
                rep.fail("domain-not-bijective", "delta(" + m.source.name(q) +
                                                     ") - ker does not map bijectively onto delta(" +
                                                     m.target.name(hq) + ")");
        } else if (drop == 1) {
            if (live.size() != 1 || m.apply(live[0]) != hq)
                rep.fail("domain-not-collapsed", "delta(" + m.source.name(q) +
                                                     ") - ker must be exactly one face sent to '" +
                                                     m.target.name(hq) + "'");
        } else {
            if (!live.empty())
                rep.fail("domain-not-in-kernel",
                         "delta(" + m.source.name(q) + ") must lie inside the kernel");
        }
    }

    // Epi: every target face has a dimension-preserving preimage.
    out.epi = true;
    for (FaceRef p : m.target.all_faces()) {
        bool covered = false;
        for (int i = 0; i < m.source.count(p.dim) && !covered; ++i)
            covered = m.apply(FaceRef{p.dim, i}) == p;
        if (!covered) out.epi = false;
    }

    if (rep.ok() && out.epi) {
        // The dual construction relies on unique non-codomain preimages.
        for (int k = 0; k <= m.target.dim(); ++k) {
            std::vector<bool> timg = m.target.gamma_image(k);
            std::vector<bool> simg = m.source.gamma_image(k);
            for (int i = 0; i < m.target.count(k); ++i) {
                if (timg[i]) continue;
                int preimages = 0;
                for (int j = 0; j < m.source.count(k); ++j)
                    if (!simg[j] && m.apply(FaceRef{k, j}) == FaceRef{k, i}) ++preimages;
                if (preimages != 1)
                    rep.fail("epi-preimage-not-unique",
                             "target face '" + m.target.faces(k)[i] + "' has " +
                                 std::to_string(preimages) + " preimages outside the gamma-image");
            }
        }
    }
    return out;
}

IotaMap compose_iota(const IotaMap& g, const IotaMap& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose_iota: endpoints do not match");
    IotaMap out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [k, v] : f.assignment) out.assignment[k] = g.assignment.at(v);
    return out;
}

ValidationReport validate_face_map(const FaceMap& m) {
    ValidationReport rep;
    for (FaceRef f : m.source.all_faces())
        if (!m.assignment.count(m.source.name(f))) {
            rep.fail("map-not-total", "no value for face '" + m.source.name(f) + "'");
            return rep;
        }
    auto apply = [&](FaceRef f) { return m.target.face(m.assignment.at(m.source.name(f))); };
    for (FaceRef f : m.source.all_faces()) {
        if (!m.target.find(m.assignment.at(m.source.name(f)))) {
            rep.fail("unknown-element", "image of '" + m.source.name(f) + "' is not a target face");
            return rep;
        }
        if (apply(f).dim != f.dim)
            rep.fail("dimension-not-preserved", "'" + m.source.name(f) + "' changes dimension");
    }
    if (!rep.ok()) return rep;
    for (FaceRef a : m.source.all_faces()) {
        if (a.dim < 1) continue;
        if (apply(m.source.gamma(a)) != m.target.gamma(apply(a)))
            rep.fail("gamma-not-preserved", "gamma(f(" + m.source.name(a) + ")) != f(gamma)");
        std::set<int> img, want(m.target.delta(apply(a)).begin(), m.target.delta(apply(a)).end());
        bool inj = true;
        for (FaceRef d : m.source.delta_faces(a))
            if (!img.insert(apply(d).idx).second) inj = false;
        if (!inj || img != want)
            rep.fail("delta-not-bijective",
                     "delta of '" + m.source.name(a) + "' does not map bijectively");
    }
    return rep;
}

}  // namespace ope
