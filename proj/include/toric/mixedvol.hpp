#pragma once

#include <vector>

#include "toric/geometry.hpp"

namespace toric {

// homogeneous degree-n polynomial t -> Vol(t_1 P_1 + ... + t_k P_k)
struct VolumePolynomial {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> exponents;  // each sums to n
    std::vector<double> coeffs;
    double fit_residual = 0;  // max interpolation error over the check lattice

    double eval(const std::vector<double>& t) const;
    double coefficient(const std::vector<int>& expo) const;
};

// Fits the volume polynomial by exact interpolation on a unisolvent lattice of
// positive weights, then re-checks the fit on the full integer lattice.
// Requires 1 <= k <= n + 1 bodies of equal dimension.
VolumePolynomial volume_polynomial(const std::vector<ConvexBody>& bodies);

// Coefficient of t_1...t_n divided by n!, so mixed_volume(P,...,P) = Vol(P).
// Requires exactly n bodies of dimension n.
double mixed_volume(const std::vector<ConvexBody>& bodies);

struct BMCheck {
    double lhs = 0;  // mixed volume
    double rhs = 0;  // product of Vol^(1/n)
    bool holds = false;
};

// Checks MV(P_1,...,P_n) >= prod Vol(P_i)^(1/n) with 1e-9 slack.
BMCheck brunn_minkowski_check(const std::vector<ConvexBody>& bodies);

// Checks Vol(t P1 + (1-t) P0)^(1/n) >= t Vol(P1)^(1/n) + (1-t) Vol(P0)^(1/n)
// at every sample, plus concavity of log Vol along the segment.
bool log_concavity_check(const ConvexBody& P0, const ConvexBody& P1,
                         const std::vector<double>& t_samples);

// Exact edge-decomposition mixed area for n = 2: half the sum over P's edges
// of h_Q(outer normal) times edge length. Independent of the polynomial path.
double mixed_area_2d(const ConvexBody& P, const ConvexBody& Q);

}  // namespace toric
