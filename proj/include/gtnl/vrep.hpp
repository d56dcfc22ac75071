#pragma once

#include "gtnl/behavior.hpp"
#include "gtnl/numeric.hpp"

#include <string>
#include <vector>

namespace gtnl {

/// Vertex representation: exact-rational vertex list, lexicographically
/// sorted, plus a provenance tag naming the HRep that produced it.
struct VRep {
    int dim = 0;
    std::vector<std::vector<Rat>> vertices;
    std::string provenance;

    std::size_t count() const { return vertices.size(); }
    void sort_and_dedupe();

    /// Interprets vertex i as a behaviour of the scenario (dim must match).
    BehaviorQ behavior(const Scenario& s, std::size_t i) const;
};

/// Compact binary cache ("GTNLV1" magic, little-endian lengths,
/// numerator/denominator magnitude byte arrays).
void save_vrep_cache(const VRep& v, const std::string& path);
VRep load_vrep_cache(const std::string& path);

}  // namespace gtnl
