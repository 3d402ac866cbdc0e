#pragma once

#include <functional>
#include <optional>

#include "ope/complex.hpp"
#include "ope/iota.hpp"

namespace ope {

struct EnumSpec {
    ComplexKind kind = ComplexKind::Tree;
    int max_total_nodes = 1;
    std::optional<int> dimension;
    std::optional<std::vector<int>> level_caps;  // per-level maxima where given
};

/// All rooted trees (paper sense: greatest element on top) with exactly n
/// nodes, one per isomorphism class, in a deterministic order. Node names are
/// "n0", "n1", ... with "n0" the root.
std::vector<Poset> enumerate_trees(int n);

/// All thickets with exactly n nodes up to isomorphism (brute force over
/// posets; desk scale only).
std::vector<Poset> enumerate_thickets(int n);

/// Isomorphism-invariant byte string; injective up to isomorphism on the
/// enumerated corpus (a checked property, not an assumption).
std::string canonical_code(const Complex& x);

/// Streams every valid complex within the bounds exactly once up to
/// isomorphism, in a stable order. Level-i nodes are named 'a'+i followed by
/// an index.
void enumerate_complexes(const EnumSpec& spec, const std::function<void(const Complex&)>& yield);
std::vector<Complex> enumerate_complexes(const EnumSpec& spec);

/// All iota-epimorphisms from p to q, exhaustively, pruned by dimension
/// monotonicity and codomain preservation; deterministic order.
std::vector<IotaMap> enumerate_iota_epis(const Hypergraph& p, const Hypergraph& q);

}  // namespace ope
