#pragma once

#include <functional>

#include "ope/duality.hpp"
#include "ope/omega.hpp"

namespace ope {
namespace sweep {

enum class Exec { Serial, Parallel };

struct Outcome {
    std::string item;
    std::vector<std::string> failures;
};

/// Runs one pure check per item, serially or OpenMP-parallel. The two modes
/// produce identical outcome vectors; the serial path is the reference the
/// parallel one is tested against.
std::vector<Outcome> run(const std::vector<std::string>& items,
                         const std::function<std::vector<std::string>(int)>& check, Exec mode);

// -- per-item verification kernels ---------------------------------------------

/// Dual passes the axioms at the expected class, eta succeeds, epsilon
/// succeeds on the dual. Empty result means pass.
std::vector<std::string> roundtrip_failures(const Complex& c);

/// Epsilon order-isomorphism, the codomain-order equivalence
/// p <- p' iff gamma(p) <+ gamma(p'), Path Lemma items 1-3 over every maximal
/// lower path and anchor, and the pi/leaf correspondence with its root law.
std::vector<std::string> order_lemma_failures(const Hypergraph& p);

/// Order preservation items 1-4 for non-kernel faces and the interval-fiber
/// property, for a validated iota-epi.
std::vector<std::string> iota_epi_failures(const IotaMap& m);

/// check_omega_laws distilled to failure strings.
std::vector<std::string> omega_failures(const Hypergraph& h, int max_level,
                                        IotaConvention conv = IotaConvention::Facewise);

}  // namespace sweep
}  // namespace ope
