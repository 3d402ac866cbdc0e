#include "ope/omega.hpp"

#include <algorithm>
#include <set>

namespace ope {

namespace {

std::vector<std::vector<int>> trim(std::vector<std::vector<int>> carrier) {
    while (!carrier.empty() && carrier.back().empty()) carrier.pop_back();
    return carrier;
}

bool closed_under_boundaries(const Hypergraph& h, const std::vector<std::vector<int>>& carrier) {
    for (size_t k = 1; k < carrier.size(); ++k)
        for (int i : carrier[k]) {
            FaceRef f{static_cast<int>(k), i};
            int g = h.gamma(f).idx;
            if (!std::binary_search(carrier[k - 1].begin(), carrier[k - 1].end(), g)) return false;
            for (int d : h.delta(f))
                if (!std::binary_search(carrier[k - 1].begin(), carrier[k - 1].end(), d)) return false;
        }
    return true;
}

bool is_subcardinal(const Hypergraph& h, const std::vector<std::vector<int>>& carrier) {
    auto t = trim(carrier);
    if (t.empty() || !closed_under_boundaries(h, t)) return false;
    return sub_hypergraph(h, t).is_cardinal();
}

}  // namespace

int Cell::carrier_dim() const {
    for (int k = static_cast<int>(carrier.size()) - 1; k >= 0; --k)
        if (!carrier[k].empty()) return k;
    return -1;
}

Cell make_cell(std::shared_ptr<const Hypergraph> host, const std::vector<std::vector<int>>& carrier,
               int level) {
    Cell c{std::move(host), trim(carrier), level};
    if (c.carrier_dim() < 0) throw std::invalid_argument("cell: empty carrier");
    if (level < c.carrier_dim())
        throw std::invalid_argument("cell: level below the carrier dimension");
    if (!closed_under_boundaries(*c.host, c.carrier))
        throw std::invalid_argument("cell: carrier not closed under gamma and delta");
    if (!sub_hypergraph(*c.host, c.carrier).is_cardinal())
        throw std::invalid_argument("cell: carrier is not an opetopic cardinal");
    return c;
}

Cell boundary(const Cell& c, Side side, int k, IotaConvention conv) {
    if (k < 0 || k >= c.level) throw std::out_of_range("boundary: level out of range");
    const Hypergraph& h = *c.host;
    std::vector<std::vector<int>> out;
    const int cd = c.carrier_dim();
    auto at = [&](int l) -> const std::vector<int>& {
        static const std::vector<int> none;
        return l >= 0 && l <= cd ? c.carrier[l] : none;
    };
    for (int l = 0; l <= std::min(k, cd); ++l) {
        if (l == k) {
            std::set<int> cut(at(k).begin(), at(k).end());
            if (side == Side::Domain) {
                for (int i : at(k + 1)) cut.erase(h.gamma(FaceRef{k + 1, i}).idx);
            } else {
                for (int i : at(k + 1))
                    for (int d : h.delta(FaceRef{k + 1, i})) cut.erase(d);
            }
            out.push_back(std::vector<int>(cut.begin(), cut.end()));
        } else if (l == k - 1 && side == Side::Codomain) {
            std::set<int> cut(at(k - 1).begin(), at(k - 1).end());
            for (int x : iota_set(h, k + 1, at(k + 1), conv)) cut.erase(x);
            out.push_back(std::vector<int>(cut.begin(), cut.end()));
        } else {
            out.push_back(at(l));
        }
    }
    Cell b{c.host, trim(out), k};
    if (b.carrier_dim() < 0) throw InternalError("boundary: empty carrier");
    return b;
}

Cell identity_cell(const Cell& c) { return Cell{c.host, c.carrier, c.level + 1}; }

Cell compose_cells(const Cell& a, const Cell& b, int k, IotaConvention conv) {
    if (a.host.get() != b.host.get() && !(*a.host == *b.host))
        throw std::invalid_argument("compose_cells: cells live in different hosts");
    if (k >= a.level || k >= b.level)
        throw std::invalid_argument("compose_cells: level out of range");
    Cell da = boundary(a, Side::Domain, k, conv);
    Cell cb = boundary(b, Side::Codomain, k, conv);
    if (!(da == cb))
        throw std::invalid_argument("compose_cells: d^(" + std::to_string(k) +
                                    ") of the left does not match c^(" + std::to_string(k) +
                                    ") of the right");
    std::vector<std::vector<int>> uni;
    const int top = std::max(a.carrier_dim(), b.carrier_dim());
    for (int l = 0; l <= top; ++l) {
        std::set<int> s;
        if (l <= a.carrier_dim()) s.insert(a.carrier[l].begin(), a.carrier[l].end());
        if (l <= b.carrier_dim()) s.insert(b.carrier[l].begin(), b.carrier[l].end());
        uni.push_back(std::vector<int>(s.begin(), s.end()));
    }
    return Cell{a.host, uni, std::max(a.level, b.level)};
}

std::vector<std::vector<std::vector<int>>> principal_union_subcardinals(const Hypergraph& t) {
    // Principal closures of maximal faces generate all unions of principals.
    std::vector<std::vector<std::vector<int>>> principals;
    for (FaceRef f : t.all_faces()) principals.push_back(face_closure(t, {f}));
    auto subset = [&](const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
        for (size_t k = 0; k < a.size(); ++k)
            if (!std::includes(b[k].begin(), b[k].end(), a[k].begin(), a[k].end())) return false;
        return true;
    };
    std::vector<std::vector<std::vector<int>>> generators;
    for (size_t i = 0; i < principals.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < principals.size() && maximal; ++j)
            if (i != j && subset(principals[i], principals[j]) && !subset(principals[j], principals[i]))
                maximal = false;
        if (maximal) generators.push_back(principals[i]);
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::set<std::vector<std::vector<int>>> seen;
    const size_t g = generators.size();
    if (g > 16) throw std::invalid_argument("principal_union_subcardinals: too many generators");
    for (unsigned long mask = 1; mask < (1ul << g); ++mask) {
        std::vector<std::vector<int>> uni(t.dim() + 1);
        for (size_t i = 0; i < g; ++i)
            if (mask & (1ul << i))
                for (int k = 0; k <= t.dim(); ++k) {
                    std::vector<int> merged;
                    std::set_union(uni[k].begin(), uni[k].end(), generators[i][k].begin(),
                                   generators[i][k].end(), std::back_inserter(merged));
                    uni[k] = std::move(merged);
                }
        if (is_subcardinal(t, uni)) seen.insert(trim(uni));
    }
    return {seen.begin(), seen.end()};
}

ValidationReport check_omega_laws(const Hypergraph& t, int max_level, IotaConvention conv) {
    ValidationReport rep;
    if (!t.is_cardinal()) {
        rep.fail("not-a-cardinal", "omega laws apply to opetopic cardinals only");
        return rep;
    }
    auto host = std::make_shared<const Hypergraph>(t);
    auto subs = principal_union_subcardinals(t);

    std::vector<Cell> cells;
    for (const auto& carrier : subs) {
        int cd = 0;
        for (int k = static_cast<int>(carrier.size()) - 1; k >= 0; --k)
            if (!carrier[k].empty()) {
                cd = k;
                break;
            }
        Cell proper = make_cell(host, carrier, cd);
        for (int n = cd; n <= max_level; ++n) cells.push_back({host, proper.carrier, n});
    }

    auto note = [&](const std::string& code, const std::string& what) {
        rep.fail(code, what + " (this implicates the iota convention in use)");
    };

    // Boundaries exist, are cardinals, and are globular.
    for (const Cell& c : cells) {
        for (int k = 0; k < c.level; ++k)
            for (Side side : {Side::Domain, Side::Codomain}) {
                Cell b;
                try {
                    b = boundary(c, side, k, conv);
                } catch (const std::exception& e) {
                    note("omega-boundary", std::string("boundary failed: ") + e.what());
                    continue;
                }
                if (!is_subcardinal(t, b.carrier))
                    note("omega-boundary", "a boundary carrier is not a sub-cardinal");
                for (int j = 0; j < k; ++j)
                    for (Side s2 : {Side::Domain, Side::Codomain}) {
                        Cell inner = boundary(b, s2, j, conv);
                        Cell direct = boundary(c, s2, j, conv);
                        if (!(inner == direct))
                            note("omega-globularity", "boundary of a boundary differs from the "
                                                      "direct boundary");
                    }
            }
        // identities
        Cell id = identity_cell(c);
        if (!(boundary(id, Side::Domain, c.level, conv) == c) ||
            !(boundary(id, Side::Codomain, c.level, conv) == c))
            note("omega-identity", "boundary of an identity does not reproduce the cell");
    }

    // Pairwise composition: units, boundary-of-composite.
    std::vector<std::vector<std::pair<int, int>>> composable(max_level);
    for (int k = 0; k < max_level; ++k)
        for (size_t i = 0; i < cells.size(); ++i)
            for (size_t j = 0; j < cells.size(); ++j) {
                const Cell &a = cells[i], &b = cells[j];
                if (k >= a.level || k >= b.level) continue;
                if (!(boundary(a, Side::Domain, k, conv) == boundary(b, Side::Codomain, k, conv)))
                    continue;
                composable[k].push_back({static_cast<int>(i), static_cast<int>(j)});
                Cell ab = compose_cells(a, b, k, conv);
                if (!is_subcardinal(t, ab.carrier))
                    note("omega-composite", "a composite carrier is not a sub-cardinal");
                if (!(boundary(ab, Side::Domain, k, conv) == boundary(b, Side::Domain, k, conv)))
                    note("omega-composite", "d^k of a composite differs from d^k of the right factor");
                if (!(boundary(ab, Side::Codomain, k, conv) == boundary(a, Side::Codomain, k, conv)))
                    note("omega-composite", "c^k of a composite differs from c^k of the left factor");
            }

    for (const Cell& c : cells)
        for (int k = 0; k < c.level; ++k) {
            // right and left units at level k
            Cell u_r{host, boundary(c, Side::Domain, k, conv).carrier, c.level};
            Cell u_l{host, boundary(c, Side::Codomain, k, conv).carrier, c.level};
            if (!(compose_cells(c, u_r, k, conv) == c))
                note("omega-unit", "composing with the domain unit changes the cell");
            if (!(compose_cells(u_l, c, k, conv) == c))
                note("omega-unit", "composing with the codomain unit changes the cell");
        }

    // Associativity.
    for (int k = 0; k < max_level; ++k)
        for (auto [i, j] : composable[k])
            for (auto [j2, l] : composable[k]) {
                if (j2 != j) continue;
                try {
                    Cell ab = compose_cells(cells[i], cells[j], k, conv);
                    Cell bc = compose_cells(cells[j], cells[l], k, conv);
                    Cell left = compose_cells(ab, cells[l], k, conv);
                    Cell right = compose_cells(cells[i], bc, k, conv);
                    if (!(left == right)) note("omega-associativity", "the two associations differ");
                } catch (const std::exception& e) {
                    note("omega-associativity", std::string("composite undefined mid-way: ") + e.what());
                }
            }

    // Interchange: (a o_l b) o_k (c o_l d) = (a o_k c) o_l (b o_k d), k < l.
    for (int k = 0; k < max_level; ++k)
        for (int l = k + 1; l < max_level; ++l)
            for (auto [a, b] : composable[l])
                for (auto [c, d] : composable[l]) {
                    Cell ab = compose_cells(cells[a], cells[b], l, conv);
                    Cell cd = compose_cells(cells[c], cells[d], l, conv);
                    bool outer = k < std::min(ab.level, cd.level) &&
                                 boundary(ab, Side::Domain, k, conv) ==
                                     boundary(cd, Side::Codomain, k, conv);
                    if (!outer) continue;
                    bool ac = boundary(cells[a], Side::Domain, k, conv) ==
                              boundary(cells[c], Side::Codomain, k, conv);
                    bool bd = boundary(cells[b], Side::Domain, k, conv) ==
                              boundary(cells[d], Side::Codomain, k, conv);
                    if (!ac || !bd) {
                        note("omega-interchange", "inner composites undefined where the outer one is");
                        continue;
                    }
                    try {
                        Cell lhs = compose_cells(ab, cd, k, conv);
                        Cell rhs = compose_cells(compose_cells(cells[a], cells[c], k, conv),
                                                 compose_cells(cells[b], cells[d], k, conv), l, conv);
                        if (!(lhs == rhs)) note("omega-interchange", "the interchange square differs");
                    } catch (const std::exception& e) {
                        note("omega-interchange", std::string("a square leg is undefined: ") + e.what());
                    }
                }
    return rep;
}

}  // namespace ope
