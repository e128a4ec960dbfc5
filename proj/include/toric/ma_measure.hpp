#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/convexfun.hpp"

namespace toric {

// Real Monge-Ampère measure of a PL convex function: each node carries
// (n!/2^n) times the volume of its subgradient cell.  Cells always tile the
// recession body, so mass captured by nodes on the node-hull boundary is the
// truncation artifact; it is reported separately and excluded from `total`.
struct MAResult {
    std::vector<double> masses;      // per node; hull-boundary nodes report 0 here
    std::vector<ConvexBody> cells;   // subgradient cells clipped to the body
    double total;                    // sum of the reported masses
    double boundary_remainder;       // mass parked on hull-boundary nodes
};

double ma_scale(int dim);  // n!/2^n

ConvexBody subgradient_cell(const PLConvexFunction& h, std::size_t i);

MAResult ma(const PLConvexFunction& h);

// |total - (n!/2^n) * volume(body)| <= tol
bool full_mass_check(const PLConvexFunction& h, double tol);

namespace detail {

// argmax region of node i inside the 2-D body polygon under
// g(p) = max_j (<p, x_j> - v_j); js lists the competitors to clip against
std::vector<P2> power_cell_2d(const std::vector<Point>& nodes, const std::vector<double>& values,
                              const std::vector<P2>& body, std::size_t i, const std::vector<int>& js);

// 1-D analogue; returns (lo, hi) with lo > hi meaning empty
std::pair<double, double> power_cell_1d(const std::vector<Point>& nodes,
                                        const std::vector<double>& values, double lo, double hi,
                                        std::size_t i, const std::vector<int>& js);

}  // namespace detail

}  // namespace toric
