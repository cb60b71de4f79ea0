#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mehr/lattice_polytope.hpp"

namespace mehr {

/// Precomputed Minkowski subset sums P_J of a fixed collection P_1..P_k.
/// For strictly positive weights the facet directions of sum_i w_i P_i do
/// not depend on the weights, so each weighted combination is assembled from
/// the matching subset sum via support-function offsets instead of a fresh
/// hull computation.
class MinkowskiFamily {
public:
    explicit MinkowskiFamily(std::vector<LatticePolytope> parts);

    int part_count() const { return static_cast<int>(parts_.size()); }
    int ambient_dimension() const { return ambient_; }
    const LatticePolytope& part(int i) const { return parts_.at(static_cast<size_t>(i)); }

    /// Sum over the subset encoded by mask; mask 0 is the origin polytope.
    const LatticePolytope& subset_sum(std::uint32_t mask) const;
    const LatticePolytope& full_sum() const { return subset_sum((1u << parts_.size()) - 1); }

    /// sum_i weights[i] * P_i for componentwise non-negative weights.
    LatticePolytope weighted_sum(std::span<const Coord> weights) const;

private:
    int ambient_ = 0;
    std::vector<LatticePolytope> parts_;
    std::vector<LatticePolytope> sums_;  // indexed by mask, entry 0 = origin
};

}  // namespace mehr
