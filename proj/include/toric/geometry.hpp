#pragma once

#include <array>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Point = std::vector<double>;

// Compact convex polytope in R^n, n in {1,2,3}, stored as a minimal vertex
// list: no vertex lies in the hull of the others (tolerance 1e-9).
// Canonical vertex order: 1-D min..max, 2-D counter-clockwise starting at the
// lexicographically smallest vertex, 3-D lexicographic.  The empty set is
// representable (it arises from cell and intersection operations only) and is
// degenerate by convention.
class ConvexBody {
public:
    ConvexBody(int dim, std::vector<Point> points);
    static ConvexBody empty_body(int dim);

    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    bool is_empty() const { return vertices_.empty(); }
    // true when the hull spans less than n dimensions (volume 0)
    bool is_degenerate() const { return degenerate_; }
    bool contains(const Point& x, double tol = 1e-9) const;

private:
    ConvexBody() = default;
    int dim_ = 0;
    std::vector<Point> vertices_;
    bool degenerate_ = true;
};

// max over vertices of <x, p>; positively homogeneous in x
double support(const ConvexBody& P, const Point& x);

// hull of pairwise vertex sums; support(P+Q, .) = support(P, .) + support(Q, .)
ConvexBody minkowski_sum(const ConvexBody& P, const ConvexBody& Q);

// Euclidean n-volume (fan triangulation from the centroid); 0 when degenerate
double volume(const ConvexBody& P);

// minimal r with P inside r * (unit simplex); requires P in the nonnegative
// orthant, throws NegativeCoordinate otherwise (translate first)
double enclosing_simplex_radius(const ConvexBody& P);

// P cap Q, dimensions 1 and 2 only (all cell work lives there)
ConvexBody intersect(const ConvexBody& P, const ConvexBody& Q);

ConvexBody scale_body(const ConvexBody& P, double t);
ConvexBody translate_body(const ConvexBody& P, const Point& t);

struct PLConvexFunction;

// hull of one subgradient element per grid node within |x| <= sample_radius;
// approaches the asymptotic body as radius and resolution grow
ConvexBody body_from_subgradients(const PLConvexFunction& h, double sample_radius);

namespace detail {

using P2 = std::array<double, 2>;

// clip a counter-clockwise convex polygon by the halfplane <nrm, p> >= c;
// mutates poly in place, may leave it empty
void clip_halfplane(std::vector<P2>& poly, double nx, double ny, double c);

double polygon_area(const std::vector<P2>& poly);

// counter-clockwise hull, collinear points dropped (tolerance 1e-9)
std::vector<P2> hull2(std::vector<P2> pts);

// facet triangles (outward-oriented vertex index triples) of a
// full-dimensional 3-D hull; empty when the input is not full-dimensional
std::vector<std::array<int, 3>> hull3_facets(const std::vector<std::array<double, 3>>& pts);

}  // namespace detail

}  // namespace toric
