#pragma once

#include <map>
#include <string>
#include <vector>

#include "ope/hypergraph.hpp"

namespace ope {

/// A contraction morphism: a total face assignment that never raises
/// dimension, preserves codomains, and collapses domains onto its kernel.
struct IotaMap {
    Hypergraph source;
    Hypergraph target;
    std::map<std::string, std::string> assignment;

    FaceRef apply(FaceRef f) const { return target.face(assignment.at(source.name(f))); }
    bool operator==(const IotaMap& other) const {
        return source == other.source && target == other.target && assignment == other.assignment;
    }
};

struct IotaReport {
    ValidationReport report;
    std::vector<std::string> kernel;                // faces strictly lowered, sorted
    std::map<std::string, int> collapse_degree;     // dim(q) - dim(h(q))
    bool epi = false;  // every target face has a dimension-preserving preimage
};

IotaMap identity_iota(const Hypergraph& h);

/// Checks conditions 1-3; on epi additionally asserts that every target face
/// outside the gamma-image of the next dimension has exactly one preimage
/// outside the gamma-image on the source side.
IotaReport validate_iota_map(const IotaMap& m);

/// Face-wise composition g o f (f first); endpoints must match.
IotaMap compose_iota(const IotaMap& g, const IotaMap& f);

/// A morphism of positive hypergraphs: gamma-equivariant, delta-bijective.
struct FaceMap {
    Hypergraph source;
    Hypergraph target;
    std::map<std::string, std::string> assignment;
};

ValidationReport validate_face_map(const FaceMap& m);

}  // namespace ope
