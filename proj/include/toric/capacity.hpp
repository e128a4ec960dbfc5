#pragma once

#include <utility>
#include <vector>

#include "toric/convexfun.hpp"

namespace toric {

// finite union of axis-aligned boxes; an empty list is the empty region
struct CompactRegion {
    std::vector<std::pair<Point, Point>> boxes;  // (lo, hi), lo <= hi componentwise
};

struct CapacityReport {
    PLConvexFunction extremal;
    double cap_mass = 0;    // measure of the extremal function inside the region
    double cap_energy = 0;  // sum of (h_P - extremal) weighted by the measure
};

// Largest convex function with slopes in P that stays <= h_P at every grid
// node and <= h_P - 1 at nodes inside the region, via the restricted
// biconjugate of that obstacle.
PLConvexFunction extremal_function(const CompactRegion& K, const ConvexBody& P,
                                   const GridSpec& grid);

// Relative capacity of the region, reported through both defining formulas;
// they agree up to grid tolerance. The empty region has capacity 0.
CapacityReport capacity(const CompactRegion& K, const ConvexBody& P, const GridSpec& grid);

}  // namespace toric
