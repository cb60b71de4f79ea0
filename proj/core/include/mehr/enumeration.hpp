#pragma once

#include <cstdint>
#include <vector>

#include "mehr/lattice_polytope.hpp"

namespace mehr {

/// Exact lattice-point counts; interior is the relative-interior count, so a
/// single point has total = interior = 1.
struct CountResult {
    std::int64_t total = 0;
    std::int64_t interior = 0;
    bool operator==(const CountResult&) const = default;
};

/// ColumnInterval resolves the last coordinate per column of the bounding
/// box from the facet inequalities; PointScan classifies every box point.
/// Both engines produce identical results.
enum class CountEngine { ColumnInterval, PointScan };

CountResult count_points(const LatticePolytope& p,
                         CountEngine engine = CountEngine::ColumnInterval);

/// All lattice points of p in lexicographic order.
std::vector<Point> enumerate_points(const LatticePolytope& p);

}  // namespace mehr
