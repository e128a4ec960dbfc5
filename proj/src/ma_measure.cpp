#include "toric/ma_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace toric {

namespace detail {

std::vector<P2> power_cell_2d(const std::vector<Point>& nodes, const std::vector<double>& values,
                              const std::vector<P2>& body, std::size_t i, const std::vector<int>& js) {
    std::vector<P2> poly = body;
    for (int j : js) {
        if (std::size_t(j) == i) continue;
        double dx = nodes[i][0] - nodes[std::size_t(j)][0];
        double dy = nodes[i][1] - nodes[std::size_t(j)][1];
        detail::clip_halfplane(poly, dx, dy, values[i] - values[std::size_t(j)]);
        if (poly.empty()) break;
    }
    return poly;
}

std::pair<double, double> power_cell_1d(const std::vector<Point>& nodes,
                                        const std::vector<double>& values, double lo, double hi,
                                        std::size_t i, const std::vector<int>& js) {
    for (int j : js) {
        if (std::size_t(j) == i) continue;
        double d = nodes[std::size_t(j)][0] - nodes[i][0];
        if (d == 0) continue;
        double c = (values[std::size_t(j)] - values[i]) / d;
        if (d > 0) hi = std::min(hi, c);
        else lo = std::max(lo, c);
        if (lo > hi) break;
    }
    return {lo, hi};
}

}  // namespace detail

double ma_scale(int dim) {
    double f = 1;
    for (int k = 2; k <= dim; ++k) f *= k;
    return f / std::pow(2.0, dim);
}

namespace {

std::vector<int> all_indices(std::size_t n) {
    std::vector<int> js(n);
    for (std::size_t i = 0; i < n; ++i) js[i] = int(i);
    return js;
}

std::vector<detail::P2> body_poly(const ConvexBody& P) {
    std::vector<detail::P2> poly;
    poly.reserve(P.vertices().size());
    for (const auto& v : P.vertices()) poly.push_back({v[0], v[1]});
    return poly;
}

ConvexBody cell_for(const PLConvexFunction& h, std::size_t i, const std::vector<int>& js) {
    if (h.dim() == 1) {
        double lo = h.body().vertices().front()[0];
        double hi = h.body().vertices().back()[0];
        auto [clo, chi] = detail::power_cell_1d(h.nodes(), h.values(), lo, hi, i, js);
        if (clo > chi + 1e-12) return ConvexBody::empty_body(1);
        return ConvexBody(1, {{clo}, {std::max(clo, chi)}});
    }
    auto poly = detail::power_cell_2d(h.nodes(), h.values(), body_poly(h.body()), i, js);
    if (poly.empty()) return ConvexBody::empty_body(2);
    std::vector<Point> pts;
    pts.reserve(poly.size());
    for (const auto& p : poly) pts.push_back({p[0], p[1]});
    return ConvexBody(2, std::move(pts));
}

}  // namespace

ConvexBody subgradient_cell(const PLConvexFunction& h, std::size_t i) {
    if (i >= h.size()) throw ValidationError("InvalidGrid", "node index out of range");
    return cell_for(h, i, all_indices(h.size()));
}

MAResult ma(const PLConvexFunction& h) {
    MAResult out;
    std::size_t n = h.size();
    out.masses.assign(n, 0.0);
    out.cells.reserve(n);
    out.total = 0;
    out.boundary_remainder = 0;
    double scale = ma_scale(h.dim());
    std::vector<int> js = all_indices(n);
    for (std::size_t i = 0; i < n; ++i) {
        ConvexBody cell = cell_for(h, i, js);
        double mass = scale * volume(cell);
        if (h.node_on_hull_boundary(i)) {
            out.boundary_remainder += mass;
        } else {
            out.masses[i] = mass;
            out.total += mass;
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

bool full_mass_check(const PLConvexFunction& h, double tol) {
    if (!(tol > 0)) throw ValidationError("InvalidParameter", "tolerance must be positive");
    return std::abs(ma(h).total - ma_scale(h.dim()) * volume(h.body())) <= tol;
}

// defined here so the complete PLConvexFunction type is visible
ConvexBody body_from_subgradients(const PLConvexFunction& h, double sample_radius) {
    if (!(sample_radius > 0))
        throw ValidationError("InvalidParameter", "sample radius must be positive");
    std::vector<int> js = all_indices(h.size());
    std::vector<Point> picks;
    for (std::size_t i = 0; i < h.size(); ++i) {
        double r = 0;
        for (int k = 0; k < h.dim(); ++k) r = std::max(r, std::abs(h.nodes()[i][k]));
        if (r > sample_radius + 1e-9) continue;
        ConvexBody cell = cell_for(h, i, js);
        if (cell.is_empty()) continue;
        Point c(h.dim(), 0.0);
        if (h.dim() == 2 && !cell.is_degenerate()) {
            // area centroid of the cell polygon
            const auto& v = cell.vertices();
            double a2 = 0, cx = 0, cy = 0;
            for (std::size_t e = 0; e < v.size(); ++e) {
                const auto& p = v[e];
                const auto& q = v[(e + 1) % v.size()];
                double cr = p[0] * q[1] - q[0] * p[1];
                a2 += cr;
                cx += (p[0] + q[0]) * cr;
                cy += (p[1] + q[1]) * cr;
            }
            c = {cx / (3 * a2), cy / (3 * a2)};
        } else {
            for (const auto& p : cell.vertices())
                for (int k = 0; k < h.dim(); ++k) c[k] += p[k] / double(cell.vertices().size());
        }
        picks.push_back(std::move(c));
    }
    if (picks.empty())
        throw ValidationError("InvalidGrid", "no nodes within the sample radius");
    return ConvexBody(h.dim(), std::move(picks));
}

}  // namespace toric
