#pragma once

#include <string>
#include <vector>

#include "ope/poset.hpp"

namespace ope {

enum class ConstellationMode { Tree, Thicket };

/// A monotone assignment of convex subtrees of `lower` to the elements of
/// `upper`, with overlapping values forcing comparability. Tree mode
/// additionally requires the root of `upper` to be sent to all of `lower`.
struct Constellation {
    Poset lower;   // S0
    Poset upper;   // S1
    std::vector<std::vector<int>> sigma;  // upper index -> sorted carrier in lower
    ConstellationMode mode = ConstellationMode::Tree;
};

/// A node of the constellation order S1 <| S0: every lower element becomes a
/// vertex (a leaf), every upper element a circle (an inner node).
struct OrderNode {
    enum Kind { Vertex, Circle } kind;
    int index;  // into lower (Vertex) or upper (Circle)
};

struct ConstellationOrder {
    Poset poset;                   // element names carry ~v / ~c markers
    std::vector<OrderNode> nodes;  // parallel to poset elements

    int vertex(int lower_index) const;
    int circle(int upper_index) const;
    bool is_circle(int node) const { return nodes[node].kind == OrderNode::Circle; }
};

std::string vertex_name(const std::string& base);
std::string circle_name(const std::string& base);

ValidationReport validate_constellation(const Constellation& c);

/// Builds the constellation order; the input must validate.
ConstellationOrder constellation_order(const Constellation& c);

/// A constellation morphism is a pair of level embeddings whose induced map on
/// constellation orders preserves every defined binary sup.
struct ConstellationMorphismCheck {
    ValidationReport report;
    std::vector<int> induced;  // src order node -> dst order node (when maps are total)
};

ConstellationMorphismCheck validate_constellation_morphism(
    const std::vector<int>& f_upper,  // src.upper index -> dst.upper index
    const std::vector<int>& f_lower,  // src.lower index -> dst.lower index
    const Constellation& src, const Constellation& dst);

/// True iff f is one-to-one and preserves and reflects order.
bool is_embedding(const Poset& src, const Poset& dst, const std::vector<int>& f);

}  // namespace ope
