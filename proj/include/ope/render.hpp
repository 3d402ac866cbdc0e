#pragma once

#include "ope/duality.hpp"

namespace ope {

enum class RenderFormat { Ascii, Dot, Svg };

/// Own: nodes labeled by their names (circles are just names in a region).
/// Intro: every node of column i is labeled by the matching face of the
/// opetope side, i.e. its epsilon-image when rendering a hypergraph, and the
/// marked dual-face name when rendering a bare complex.
enum class LabelConvention { Own, Intro };

/// One column per constellation: vertices as dots, circles as regions
/// enclosing the leaves under them and the smaller circles. Deterministic.
std::string render(const Complex& c, RenderFormat format,
                   LabelConvention labels = LabelConvention::Own);

/// Opetopes and cardinals are rendered via their dual complex.
std::string render(const Hypergraph& h, RenderFormat format,
                   LabelConvention labels = LabelConvention::Own);

}  // namespace ope
