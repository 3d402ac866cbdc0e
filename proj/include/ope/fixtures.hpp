#pragma once

#include "ope/duality.hpp"

namespace ope {
namespace fixtures {

/// Built-in names: O1, O2, O3, SCARD, T1, T2, T3, THK, F32, F32*.
std::vector<std::string> names();
bool has(const std::string& name);

Hypergraph O1();
Hypergraph O2();
Hypergraph O3();
Hypergraph SCARD();
Hypergraph point();  // the 0-dimensional opetope, for tests

Complex T1();
Complex T2();
Complex T3();
Complex THK();

IotaMap F32();
ComplexMorphism F32_dual();  // listed as "F32*"

/// Serialized canonical document for any fixture name (accepts "F32star" as
/// an alias for "F32*").
std::string document(const std::string& name);

}  // namespace fixtures
}  // namespace ope
