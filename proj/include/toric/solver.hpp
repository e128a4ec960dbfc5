#pragma once

#include <string>
#include <vector>

#include "toric/ma_measure.hpp"

namespace toric {

struct DiscreteMeasure {
    std::vector<Point> atoms;
    std::vector<double> masses;
};

struct SolveReport {
    PLConvexFunction solution;
    double residual;  // max over atoms of |cell mass - target mass|
    int iterations;
    std::string normalization;
};

// Monge-Ampere solve MA(h) = mu in the class of convex functions with
// recession body P, truncated to a Dirichlet frame on the box of radius
// box_radius that carries support-function values.  The masses must sum to
// (n!/2^n) * volume(P) within 1e-9.  The output is normalized so that
// sup(h - h_P) over R^n equals 0.
SolveReport solve_ma(const ConvexBody& P, const DiscreteMeasure& mu, double box_radius, double tol);

// MA(h) = e^{lambda h} mu via damped fixed-point iteration over rescaled
// plain solves; the equation pins the additive constant, so no normalization
SolveReport solve_aubin_yau(const ConvexBody& P, const DiscreteMeasure& mu, double lambda,
                            double box_radius, double tol);

// axis-aligned box density, constant on [lo, hi] with the given total mass
struct DensityBox {
    Point lo;
    Point hi;
    double total;
};

// For each level k: discretize the density into 2^k-per-axis cell-center
// atoms, solve, and report sup over nodes of (h_P - h) under the solver's
// normalization.  Boundedness of the sequence is the quantity of interest.
std::vector<double> uniform_bound_diagnostic(const ConvexBody& P, const DensityBox& density,
                                             const std::vector<int>& levels);

}  // namespace toric
