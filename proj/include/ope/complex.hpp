#pragma once

#include <optional>
#include <vector>

#include "ope/constellation.hpp"

namespace ope {

enum class ComplexKind { Tree, Thicket };

/// A tower of constellations tau_i : T_{i+1} -> St(T_i). Levels above the
/// dimension are absent, never empty posets; the dimension is levels.size()-1.
struct Complex {
    ComplexKind kind = ComplexKind::Tree;
    std::vector<Poset> levels;
    std::vector<std::vector<std::vector<int>>> sigmas;  // sigmas[i][u] in levels[i]

    int dim() const { return static_cast<int>(levels.size()) - 1; }
    Constellation constellation_at(int i) const;

    bool operator==(const Complex& other) const;
};

ValidationReport validate_complex(const Complex& x);

/// Per-level maximal-element counts; zero above the dimension (the returned
/// vector has dim+1 entries).
std::vector<int> size_of(const Complex& x);

/// The i-th constellation order T_{i+1} <| T_i. For i == dim the upper tree is
/// absent and the result is the antichain of the top level's vertices.
ConstellationOrder complex_order_at(const Complex& x, int i);

struct ComplexMorphism {
    Complex source;
    Complex target;
    std::vector<std::vector<int>> maps;  // maps[i]: source level-i index -> target level-i index

    bool operator==(const ComplexMorphism& other) const;
};

ComplexMorphism identity_morphism(const Complex& x);

ValidationReport validate_complex_morphism(const ComplexMorphism& f);

/// Level-wise composition g o f; endpoints must agree structurally.
ComplexMorphism compose_complex_morphisms(const ComplexMorphism& g, const ComplexMorphism& f);

/// A full family of level bijections forming an isomorphism, or nullopt.
/// Deterministic given the input ordering.
std::optional<std::vector<std::vector<int>>> complexes_isomorphic(const Complex& x,
                                                                  const Complex& y);

/// Structural colors per level element, refined across levels to a fixpoint.
/// Isomorphic complexes get identical color multisets; isomorphisms preserve
/// colors.
std::vector<std::vector<int>> complex_colors(const Complex& x);

}  // namespace ope
