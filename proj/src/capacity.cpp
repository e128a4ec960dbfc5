#include "toric/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toric/ma_measure.hpp"

namespace toric {
namespace {

void validate_region(const CompactRegion& K, int dim) {
    for (const auto& [lo, hi] : K.boxes) {
        if (int(lo.size()) != dim || int(hi.size()) != dim)
            throw ValidationError("DimensionMismatch", "region box dimension mismatch");
        for (int k = 0; k < dim; ++k) {
            if (!std::isfinite(lo[std::size_t(k)]) || !std::isfinite(hi[std::size_t(k)]))
                throw ValidationError("InvalidRegion", "region box must be bounded");
            if (lo[std::size_t(k)] > hi[std::size_t(k)])
                throw ValidationError("InvalidRegion", "region box has inverted bounds");
        }
    }
}

bool in_region(const CompactRegion& K, const Point& x) {
    for (const auto& [lo, hi] : K.boxes) {
        bool inside = true;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] < lo[k] - 1e-12 || x[k] > hi[k] + 1e-12) { inside = false; break; }
        if (inside) return true;
    }
    return false;
}

}  // namespace

PLConvexFunction extremal_function(const CompactRegion& K, const ConvexBody& P,
                                   const GridSpec& grid) {
    if (P.dim() < 1 || P.dim() > 2)
        throw ValidationError("UnsupportedDimension", "extremal functions cover dimensions 1 and 2");
    if (P.is_empty()) throw ValidationError("InvalidBody", "body must be nonempty");
    int dim = P.dim();
    validate_region(K, dim);
    double reach = 0;
    for (const auto& [lo, hi] : K.boxes)
        for (int k = 0; k < dim; ++k)
            reach = std::max({reach, std::abs(lo[std::size_t(k)]), std::abs(hi[std::size_t(k)])});
    if (reach > grid.box_radius - grid.mesh)
        throw ValidationError("GridDoesNotCoverRegion",
                              "grid must cover the region with one mesh of margin");

    std::vector<Point> nodes = grid_nodes(dim, grid.box_radius, grid.mesh);
    std::vector<double> obstacle(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        obstacle[i] = support(P, nodes[i]) - (in_region(K, nodes[i]) ? 1.0 : 0.0);

    // conjugate g*(p) = max_i <p, x_i> - o_i is piecewise affine on the power
    // cells of the obstacle data; the biconjugate at any x is then the max of
    // <p, x> - g*(p) over cell corners, since that map is concave in p
    std::vector<int> all(nodes.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = int(j);
    std::vector<std::pair<Point, double>> corners;  // (p, g*(p))
    if (dim == 1) {
        double plo = P.vertices().front()[0];
        double phi = P.vertices().back()[0];
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            auto [lo, hi] = detail::power_cell_1d(nodes, obstacle, plo, phi, j, all);
            if (lo > hi + 1e-12) continue;
            corners.push_back({{lo}, lo * nodes[j][0] - obstacle[j]});
            corners.push_back({{hi}, hi * nodes[j][0] - obstacle[j]});
        }
    } else {
        std::vector<detail::P2> body_poly;
        for (const auto& p : P.vertices()) body_poly.push_back({p[0], p[1]});
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            std::vector<detail::P2> cell = detail::power_cell_2d(nodes, obstacle, body_poly, j, all);
            for (const auto& p : cell)
                corners.push_back({{p[0], p[1]}, p[0] * nodes[j][0] + p[1] * nodes[j][1] - obstacle[j]});
        }
    }
    if (corners.empty()) throw ValidationError("InvalidBody", "body has no interior");

    std::vector<double> vals(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [p, gstar] : corners) {
            double dot = 0;
            for (std::size_t k = 0; k < p.size(); ++k) dot += p[k] * nodes[i][k];
            best = std::max(best, dot - gstar);
        }
        vals[i] = std::min(best, obstacle[i]);
    }
    return PLConvexFunction(nodes, vals, P);
}

CapacityReport capacity(const CompactRegion& K, const ConvexBody& P, const GridSpec& grid) {
    PLConvexFunction h = extremal_function(K, P, grid);
    MAResult m = ma(h);
    CapacityReport out{h, 0, 0};
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (m.masses[i] == 0) continue;
        if (in_region(K, h.nodes()[i])) out.cap_mass += m.masses[i];
        out.cap_energy += (support(P, h.nodes()[i]) - h.values()[i]) * m.masses[i];
    }
    return out;
}

}  // namespace toric
