#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

// one affine piece x -> <slope, x> + offset of a piecewise-linear convex function
struct AffinePiece {
    Point slope;
    double offset;
};

// Piecewise-linear convex function given by node/value data plus a recession
// body P.  The represented function equals the lower convex envelope of the
// data on the node hull and grows like support(P, .) outside it.  Construction
// rejects data that does not lie on its own envelope (within 1e-9) and node
// lists with duplicates.  Dimensions 1 and 2.
class PLConvexFunction {
public:
    PLConvexFunction(std::vector<Point> nodes, std::vector<double> values, ConvexBody body);

    int dim() const { return dim_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<Point>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    const ConvexBody& body() const { return body_; }
    // interior affine pieces of the envelope; empty when the nodes are
    // affinely degenerate (single node, collinear 2-D nodes)
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const ConvexBody& node_hull() const { return node_hull_; }
    // nodes on the boundary of the node hull absorb the truncation remainder
    bool node_on_hull_boundary(std::size_t i) const { return boundary_[i]; }

private:
    int dim_;
    std::vector<Point> nodes_;
    std::vector<double> values_;
    ConvexBody body_;
    ConvexBody node_hull_;
    std::vector<AffinePiece> pieces_;
    std::vector<bool> boundary_;
};

// envelope interpolation inside the node hull, nearest-node recession
// extension value + support(P, x - node) outside it
double eval(const PLConvexFunction& h, const Point& x);

// smooth convex reference (r/2) * log(1 + sum_i e^{2 x_i}); overflow-safe
double reference_potential(double r, const Point& x);

// support-function samples of P at the given nodes
PLConvexFunction sample_support(const ConvexBody& P, std::vector<Point> nodes);

// largest convex function below min(u, v) on the shared node set; the
// recession body is the intersection of the two bodies
PLConvexFunction rooftop(const PLConvexFunction& u, const PLConvexFunction& v);

// limit of rooftop(psi + C, chi) under doubling C, stopped when two
// consecutive iterates differ by at most tol at every node
PLConvexFunction singularity_envelope(const PLConvexFunction& psi, const PLConvexFunction& chi,
                                      double tol);

// uniform node box [-box_radius, box_radius]^dim; the mesh is rounded so the
// box divides evenly (effective mesh = 2*box_radius / round(2*box_radius/mesh))
struct GridSpec {
    double box_radius;
    double mesh;
};

std::vector<Point> grid_nodes(int dim, double box_radius, double mesh);

struct ModelCheck {
    bool model;
    double gap;  // last observed sup of (reference envelope - h) on the schedule
};

// decides whether h stays within bounded distance of its reference envelope
// across a schedule of growing boxes; empty schedule picks a default
ModelCheck is_model(const PLConvexFunction& h, double r, std::vector<GridSpec> schedule = {});

// discrete convex conjugate max over nodes of (<p, x> - value) at each dual point
std::vector<double> legendre(const PLConvexFunction& h, const std::vector<Point>& dual_grid);

// lower convex envelope of scattered data, evaluated at the data sites
std::vector<double> envelope_values(int dim, const std::vector<Point>& nodes,
                                    const std::vector<double>& values);

std::vector<AffinePiece> envelope_pieces(int dim, const std::vector<Point>& nodes,
                                         const std::vector<double>& values);

}  // namespace toric
