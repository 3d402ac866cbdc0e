#include "ope/constellation.hpp"

#include <algorithm>
#include <set>

namespace ope {

std::string vertex_name(const std::string& base) { return base + "~v"; }
std::string circle_name(const std::string& base) { return base + "~c"; }

int ConstellationOrder::vertex(int lower_index) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == OrderNode::Vertex && nodes[i].index == lower_index) return i;
    throw std::out_of_range("constellation order: no such vertex");
}

int ConstellationOrder::circle(int upper_index) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == OrderNode::Circle && nodes[i].index == upper_index) return i;
    throw std::out_of_range("constellation order: no such circle");
}

ValidationReport validate_constellation(const Constellation& c) {
    ValidationReport rep;
    const bool tree_mode = c.mode == ConstellationMode::Tree;

    if (tree_mode) {
        if (!c.lower.is_tree()) rep.fail("lower-not-tree", "lower poset does not classify as a tree");
        if (!c.upper.is_tree()) rep.fail("upper-not-tree", "upper poset does not classify as a tree");
    } else {
        if (!c.lower.is_thicket()) rep.fail("lower-not-thicket", "lower poset is not a thicket");
        if (!c.upper.is_thicket()) rep.fail("upper-not-thicket", "upper poset is not a thicket");
    }
    if (static_cast<int>(c.sigma.size()) != c.upper.size()) {
        rep.fail("sigma-not-total", "sigma must assign a value to every upper element");
        return rep;
    }
    if (!rep.ok()) return rep;

    for (int s = 0; s < c.upper.size(); ++s) {
        ValidationReport sub = validate_convex_subtree(c.lower, c.sigma[s], nullptr);
        if (!sub.ok())
            rep.fail("sigma-value-not-convex-subtree",
                     "sigma(" + c.upper.name(s) + "): " + sub.summary());
    }
    if (!rep.ok()) return rep;

    auto contains = [&](const std::vector<int>& xs, int v) {
        return std::binary_search(xs.begin(), xs.end(), v);
    };
    auto subset = [&](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto intersect = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    for (int s = 0; s < c.upper.size(); ++s)
        for (int t = 0; t < c.upper.size(); ++t)
            if (s != t && c.upper.lt(s, t) && !subset(c.sigma[s], c.sigma[t]))
                rep.fail("not-monotone", "sigma(" + c.upper.name(s) + ") is not contained in sigma(" +
                                             c.upper.name(t) + ")");

    for (int s = 0; s < c.upper.size(); ++s)
        for (int t = s + 1; t < c.upper.size(); ++t)
            if (!c.upper.comparable(s, t) && !intersect(c.sigma[s], c.sigma[t]).empty())
                rep.fail("overlap-incomparable", "sigma values of incomparable '" + c.upper.name(s) +
                                                     "' and '" + c.upper.name(t) + "' overlap");

    if (tree_mode) {
        int root = *c.upper.classification().root;
        if (static_cast<int>(c.sigma[root].size()) != c.lower.size())
            rep.fail("top-not-preserved",
                     "sigma(" + c.upper.name(root) + ") must be the whole lower tree");
    }

    if (!rep.ok()) return rep;

    // On pass, assert the equivalent formulation: fibers are chains and
    // sigma(s) /\ sigma(t) = sigma(s /\ t) whenever the intersection is nonempty.
    for (int x = 0; x < c.lower.size(); ++x) {
        std::vector<int> fiber;
        for (int s = 0; s < c.upper.size(); ++s)
            if (contains(c.sigma[s], x)) fiber.push_back(s);
        for (size_t i = 0; i < fiber.size(); ++i)
            for (size_t j = i + 1; j < fiber.size(); ++j)
                if (!c.upper.comparable(fiber[i], fiber[j]))
                    rep.fail("fiber-not-chain", "fiber over '" + c.lower.name(x) + "' is not a chain");
    }
    for (int s = 0; s < c.upper.size(); ++s)
        for (int t = s + 1; t < c.upper.size(); ++t) {
            auto meet_value = intersect(c.sigma[s], c.sigma[t]);
            if (meet_value.empty()) continue;
            int lo = c.upper.leq(s, t) ? s : t;  // comparable by the overlap clause
            if (meet_value != c.sigma[lo])
                rep.fail("inf-not-reflected", "sigma(" + c.upper.name(s) + ") /\\ sigma(" +
                                                  c.upper.name(t) + ") differs from sigma of the meet");
        }
    return rep;
}

ConstellationOrder constellation_order(const Constellation& c) {
    ValidationReport rep = validate_constellation(c);
    if (!rep.ok())
        throw std::invalid_argument("constellation_order: input does not validate: " + rep.summary());

    const int nl = c.lower.size(), nu = c.upper.size();
    const int n = nl + nu;
    std::vector<std::string> names(n);
    std::vector<OrderNode> nodes(n);
    for (int i = 0; i < nl; ++i) {
        names[i] = vertex_name(c.lower.name(i));
        nodes[i] = {OrderNode::Vertex, i};
    }
    for (int j = 0; j < nu; ++j) {
        names[nl + j] = circle_name(c.upper.name(j));
        nodes[nl + j] = {OrderNode::Circle, j};
    }

    auto contains = [&](const std::vector<int>& xs, int v) {
        return std::binary_search(xs.begin(), xs.end(), v);
    };
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int j = 0; j < nu; ++j)
        for (int k = 0; k < nu; ++k)
            if (c.upper.lt(j, k)) lt[nl + j][nl + k] = true;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nu; ++j)
            if (contains(c.sigma[j], i)) lt[i][nl + j] = true;

    ConstellationOrder out;
    Poset built = Poset::from_relation(names, lt);
    // from_relation re-sorts by name; rebuild the node table in that order.
    out.nodes.resize(n);
    for (int i = 0; i < n; ++i) out.nodes[built.index_of(names[i])] = nodes[i];
    out.poset = std::move(built);

    const bool tree_mode = c.mode == ConstellationMode::Tree;
    if (tree_mode && !out.poset.is_tree())
        throw InternalError("constellation order of a valid tree constellation must be a tree");
    if (!tree_mode && !out.poset.is_thicket())
        throw InternalError("constellation order of a valid t-constellation must be a thicket");
    return out;
}

bool is_embedding(const Poset& src, const Poset& dst, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != src.size()) return false;
    for (int a = 0; a < src.size(); ++a)
        for (int b = 0; b < src.size(); ++b) {
            if (a != b && f[a] == f[b]) return false;
            if (src.leq(a, b) != dst.leq(f[a], f[b])) return false;
        }
    return true;
}

ConstellationMorphismCheck validate_constellation_morphism(const std::vector<int>& f_upper,
                                                           const std::vector<int>& f_lower,
                                                           const Constellation& src,
                                                           const Constellation& dst) {
    ConstellationMorphismCheck out;
    ValidationReport& rep = out.report;
    if (static_cast<int>(f_upper.size()) != src.upper.size() ||
        static_cast<int>(f_lower.size()) != src.lower.size()) {
        rep.fail("map-not-total", "level maps must cover every source element");
        return out;
    }
    for (int x : f_lower)
        if (x < 0 || x >= dst.lower.size()) {
            rep.fail("unknown-element", "lower map hits no element of the target");
            return out;
        }
    for (int x : f_upper)
        if (x < 0 || x >= dst.upper.size()) {
            rep.fail("unknown-element", "upper map hits no element of the target");
            return out;
        }

    if (!is_embedding(src.lower, dst.lower, f_lower))
        rep.fail("lower-not-embedding", "lower map is not one-to-one order preserving and reflecting");
    if (!is_embedding(src.upper, dst.upper, f_upper))
        rep.fail("upper-not-embedding", "upper map is not one-to-one order preserving and reflecting");
    if (!rep.ok()) return out;

    ConstellationOrder so = constellation_order(src);
    ConstellationOrder to = constellation_order(dst);
    const int n = so.poset.size();
    out.induced.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const OrderNode& nd = so.nodes[i];
        if (nd.kind == OrderNode::Vertex)
            out.induced[i] = to.vertex(f_lower[nd.index]);
        else
            out.induced[i] = to.circle(f_upper[nd.index]);
    }

    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            auto s = so.poset.sup2(a, b);
            if (!s) continue;
            auto t = to.poset.sup2(out.induced[a], out.induced[b]);
            if (!t || *t != out.induced[*s])
                rep.fail("sup-not-preserved",
                         "sup(" + so.poset.name(a) + ", " + so.poset.name(b) + ") = " +
                             so.poset.name(*s) + " maps to " + to.poset.name(out.induced[*s]) +
                             " but the images' sup is " + (t ? to.poset.name(*t) : "undefined"));
        }
    return out;
}

}  // namespace ope
