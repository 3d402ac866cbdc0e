#pragma once

#include "ope/complex.hpp"
#include "ope/iota.hpp"

namespace ope {

struct DualityWitness {
    enum class Direction { OpetopeToComplex, ComplexToOpetope };
    Direction direction = Direction::OpetopeToComplex;
    /// Per level/dimension: (source name, result name) pairs, total and
    /// bijective onto the stated carriers.
    std::vector<std::vector<std::pair<std::string, std::string>>> levels;
};

/// Splits a marked dual-face name: "x~v" -> ("x", false), "x~c" -> ("x", true).
std::pair<std::string, bool> split_marked(const std::string& name);

/// P |-> P*: levels P_i - gamma(P_{i+1}) under the lower order, constellations
/// pi_i(p) = { s : s <+ gamma(p) }. Opetopes give tree complexes, opetopic
/// cardinals give thicket complexes. Face names are kept as node names.
Complex dualize_opetope(const Hypergraph& h, DualityWitness* witness = nullptr);

/// f |-> f* on iota-epimorphisms (contravariant): the dual of f : P -> Q is the
/// tree complex morphism Q* -> P* picking, over each q, the unique preimage
/// outside the gamma-image of the next dimension.
ComplexMorphism dualize_iota_epi(const IotaMap& f);

/// S |-> S*: faces are the constellation-order nodes, gamma is the sup of the
/// reinterpreted leaf set, delta its cover. Tree complexes give positive
/// opetopes, thicket complexes give opetopic cardinals. Node x of level i
/// appears as faces "x~v" (dimension i) and "x~c" (dimension i-1).
Hypergraph dualize_complex(const Complex& s, DualityWitness* witness = nullptr);

/// f |-> f* on complex morphisms (contravariant): the j-maximal /
/// <=co-maximal rule. The boundary set delta gamma^(j+1)(t) is read as {t}
/// when j = dim(t).
IotaMap dualize_complex_morphism(const ComplexMorphism& f);

struct NaturalIsoWitness {
    enum class Kind { Eta, Epsilon };
    Kind kind = Kind::Eta;
    std::vector<std::map<std::string, std::string>> components;  // per level/dimension
};

/// eta_S : S -> S**, s |-> s~v; verified to be an isomorphism of complexes
/// including the commuting square with sigma and sigma**. Failures raise
/// InternalError: the theorem guarantees success on valid input.
NaturalIsoWitness eta_iso(const Complex& s);

/// epsilon_P : P** -> P, s~v |-> s, s~c |-> gamma(s); verified to be a
/// dimension-wise bijection preserving gamma and delta and an order
/// isomorphism onto (P_i, <+).
NaturalIsoWitness epsilon_iso(const Hypergraph& p);

}  // namespace ope
