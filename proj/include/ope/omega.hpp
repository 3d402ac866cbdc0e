#pragma once

#include <memory>

#include "ope/hypergraph.hpp"

namespace ope {

enum class Side { Domain, Codomain };

/// An n-cell of the omega-category attached to a host cardinal: a pair
/// (sub-cardinal, level) with dim(carrier) <= level.
struct Cell {
    std::shared_ptr<const Hypergraph> host;
    std::vector<std::vector<int>> carrier;  // per-dimension sorted face indices in host
    int level = 0;

    int carrier_dim() const;
    bool proper() const { return level == carrier_dim(); }
    bool operator==(const Cell& other) const {
        return carrier == other.carrier && level == other.level;
    }
};

Cell make_cell(std::shared_ptr<const Hypergraph> host, const std::vector<std::vector<int>>& carrier,
               int level);

/// d^(k) / c^(k); requires k < cell.level. The codomain formula drops the
/// iota-internal faces one dimension below the cut.
Cell boundary(const Cell& c, Side side, int k, IotaConvention conv = IotaConvention::Facewise);

/// (S, n) -> (S, n+1).
Cell identity_cell(const Cell& c);

/// Union composition a o_k b, defined when d^(k)(a) = c^(k)(b).
Cell compose_cells(const Cell& a, const Cell& b, int k,
                   IotaConvention conv = IotaConvention::Facewise);

/// All sub-cardinals of t arising as unions of principal sub-structures,
/// as carriers (only those passing the cardinal axioms).
std::vector<std::vector<std::vector<int>>> principal_union_subcardinals(const Hypergraph& t);

/// Exhaustive law check over all cells (union-of-principals carriers, levels
/// up to max_level): boundary well-formedness and globularity, identity and
/// unit laws, associativity, boundary-of-composite, interchange. Failures are
/// reported with the dedicated iota-convention diagnostic.
ValidationReport check_omega_laws(const Hypergraph& t, int max_level,
                                  IotaConvention conv = IotaConvention::Facewise);

}  // namespace ope
