#include "toric/convexfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace toric {
namespace {

constexpr double kTol = 1e-9;

struct EnvelopeData {
    std::vector<AffinePiece> pieces;
    std::vector<double> env;
};

// lower chain of (x, value) pairs; env = chain interpolant at every node
EnvelopeData envelope_1d(const std::vector<Point>& nodes, const std::vector<double>& values) {
    size_t n = nodes.size();
    EnvelopeData out;
    out.env.resize(n);
    if (n == 1) {
        out.env[0] = values[0];
        return out;
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return nodes[a][0] < nodes[b][0]; });
    std::vector<int> chain;
    for (int i : idx) {
        while (chain.size() >= 2) {
            int a = chain[chain.size() - 2], b = chain[chain.size() - 1];
            double cr = (nodes[b][0] - nodes[a][0]) * (values[i] - values[a]) -
                        (values[b] - values[a]) * (nodes[i][0] - nodes[a][0]);
            if (cr <= 0) chain.pop_back();
            else break;
        }
        chain.push_back(i);
    }
    for (size_t s = 0; s + 1 < chain.size(); ++s) {
        int a = chain[s], b = chain[s + 1];
        double slope = (values[b] - values[a]) / (nodes[b][0] - nodes[a][0]);
        out.pieces.push_back({{slope}, values[a] - slope * nodes[a][0]});
    }
    size_t seg = 0;
    for (int i : idx) {
        while (seg + 2 < chain.size() && nodes[chain[seg + 1]][0] < nodes[i][0]) ++seg;
        int a = chain[seg], b = chain[seg + 1];
        double t = (nodes[i][0] - nodes[a][0]) / (nodes[b][0] - nodes[a][0]);
        out.env[i] = std::min(values[i], values[a] + t * (values[b] - values[a]));
    }
    return out;
}

using A3 = std::array<double, 3>;

bool point_in_tri(const detail::P2& a, const detail::P2& b, const detail::P2& c,
                  const detail::P2& p) {
    double area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if (std::abs(area2) < 1e-18) return false;
    double s1 = ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])) / area2;
    double s2 = ((c[0] - b[0]) * (p[1] - b[1]) - (c[1] - b[1]) * (p[0] - b[0])) / area2;
    double s3 = ((a[0] - c[0]) * (p[1] - c[1]) - (a[1] - c[1]) * (p[0] - c[0])) / area2;
    const double m = -1e-7;
    return s1 >= m && s2 >= m && s3 >= m;
}

EnvelopeData envelope_2d(const std::vector<Point>& nodes, const std::vector<double>& values) {
    size_t n = nodes.size();
    EnvelopeData out;
    out.env = values;
    if (n == 1) return out;

    std::vector<detail::P2> xy;
    xy.reserve(n);
    for (const auto& p : nodes) xy.push_back({p[0], p[1]});
    auto hull = detail::hull2(xy);
    if (hull.size() < 3) {
        // collinear nodes: reduce along the spanning direction
        size_t far = 0;
        double best = -1;
        for (size_t i = 1; i < n; ++i) {
            double d = std::hypot(xy[i][0] - xy[0][0], xy[i][1] - xy[0][1]);
            if (d > best) { best = d; far = i; }
        }
        double ux = (xy[far][0] - xy[0][0]) / best, uy = (xy[far][1] - xy[0][1]) / best;
        std::vector<Point> ts(n);
        for (size_t i = 0; i < n; ++i)
            ts[i] = {(xy[i][0] - xy[0][0]) * ux + (xy[i][1] - xy[0][1]) * uy};
        EnvelopeData line = envelope_1d(ts, values);
        out.env = std::move(line.env);  // pieces stay empty: no full-dimensional interior
        return out;
    }

    std::vector<A3> lifted(n);
    for (size_t i = 0; i < n; ++i) lifted[i] = {nodes[i][0], nodes[i][1], values[i]};
    auto facets = detail::hull3_facets(lifted);

    std::vector<std::array<detail::P2, 3>> tris;
    if (facets.empty()) {
        // nodes span the plane but the lifted data is flat: the data is affine
        size_t far = 0;
        double best = -1;
        for (size_t i = 1; i < n; ++i) {
            double d = std::hypot(xy[i][0] - xy[0][0], xy[i][1] - xy[0][1]);
            if (d > best) { best = d; far = i; }
        }
        size_t third = 0;
        best = -1;
        for (size_t i = 0; i < n; ++i) {
            double cr = std::abs((xy[far][0] - xy[0][0]) * (xy[i][1] - xy[0][1]) -
                                 (xy[far][1] - xy[0][1]) * (xy[i][0] - xy[0][0]));
            if (cr > best) { best = cr; third = i; }
        }
        double x1 = xy[far][0] - xy[0][0], y1 = xy[far][1] - xy[0][1];
        double x2 = xy[third][0] - xy[0][0], y2 = xy[third][1] - xy[0][1];
        double det = x1 * y2 - y1 * x2;
        double d1 = values[far] - values[0], d2 = values[third] - values[0];
        double ax = (d1 * y2 - d2 * y1) / det;
        double ay = (x1 * d2 - x2 * d1) / det;
        out.pieces.push_back({{ax, ay}, values[0] - ax * xy[0][0] - ay * xy[0][1]});
        for (size_t i = 0; i < n; ++i)
            out.env[i] = std::min(values[i], ax * xy[i][0] + ay * xy[i][1] + out.pieces[0].offset);
        return out;
    }

    for (const auto& f : facets) {
        const A3& a = lifted[f[0]];
        const A3& b = lifted[f[1]];
        const A3& c = lifted[f[2]];
        A3 u = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        A3 v = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        A3 nr = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        double len = std::sqrt(nr[0] * nr[0] + nr[1] * nr[1] + nr[2] * nr[2]);
        if (len <= 0) continue;
        double nz = nr[2] / len;
        if (nz >= -1e-7) continue;  // keep lower facets only; walls would corrupt the max
        double sx = -nr[0] / nr[2], sy = -nr[1] / nr[2];
        out.pieces.push_back({{sx, sy}, a[2] - sx * a[0] - sy * a[1]});
        tris.push_back({detail::P2{a[0], a[1]}, detail::P2{b[0], b[1]}, detail::P2{c[0], c[1]}});
    }

    std::vector<double> env(n, -std::numeric_limits<double>::infinity());
    size_t np = out.pieces.size();
    if (n * np <= 500000) {
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < np; ++k) {
                const AffinePiece& pc = out.pieces[k];
                env[i] = std::max(env[i], pc.slope[0] * xy[i][0] + pc.slope[1] * xy[i][1] + pc.offset);
            }
    } else {
        // bucket the nodes so each facet only visits candidates in its bounding box;
        // every lower-facet plane is a global minorant, so extra hits are harmless
        double lox = xy[0][0], hix = xy[0][0], loy = xy[0][1], hiy = xy[0][1];
        for (const auto& p : xy) {
            lox = std::min(lox, p[0]); hix = std::max(hix, p[0]);
            loy = std::min(loy, p[1]); hiy = std::max(hiy, p[1]);
        }
        int K = std::max(1, int(std::sqrt(double(n))));
        double wx = std::max(hix - lox, 1e-12) / K, wy = std::max(hiy - loy, 1e-12) / K;
        auto bx = [&](double x) { return std::clamp(int((x - lox) / wx), 0, K - 1); };
        auto by = [&](double y) { return std::clamp(int((y - loy) / wy), 0, K - 1); };
        std::vector<std::vector<int>> bucket(size_t(K) * K);
        for (size_t i = 0; i < n; ++i) bucket[size_t(by(xy[i][1])) * K + bx(xy[i][0])].push_back(int(i));
        for (size_t k = 0; k < np; ++k) {
            const auto& t = tris[k];
            double tlx = std::min({t[0][0], t[1][0], t[2][0]}), thx = std::max({t[0][0], t[1][0], t[2][0]});
            double tly = std::min({t[0][1], t[1][1], t[2][1]}), thy = std::max({t[0][1], t[1][1], t[2][1]});
            const AffinePiece& pc = out.pieces[k];
            for (int cy = by(tly); cy <= by(thy); ++cy)
                for (int cx = bx(tlx); cx <= bx(thx); ++cx)
                    for (int i : bucket[size_t(cy) * K + cx]) {
                        if (!point_in_tri(t[0], t[1], t[2], xy[size_t(i)])) continue;
                        env[size_t(i)] = std::max(env[size_t(i)],
                                                  pc.slope[0] * xy[size_t(i)][0] +
                                                      pc.slope[1] * xy[size_t(i)][1] + pc.offset);
                    }
        }
    }
    for (size_t i = 0; i < n; ++i)
        out.env[i] = std::isfinite(env[i]) ? std::min(values[i], env[i]) : values[i];
    return out;
}

EnvelopeData compute_envelope(int dim, const std::vector<Point>& nodes,
                              const std::vector<double>& values) {
    return dim == 1 ? envelope_1d(nodes, values) : envelope_2d(nodes, values);
}

double seg_dist(const Point& a, const Point& b, const Point& p) {
    double dx = b[0] - a[0], dy = b[1] - a[1];
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}

}  // namespace

std::vector<double> envelope_values(int dim, const std::vector<Point>& nodes,
                                    const std::vector<double>& values) {
    return compute_envelope(dim, nodes, values).env;
}

std::vector<AffinePiece> envelope_pieces(int dim, const std::vector<Point>& nodes,
                                         const std::vector<double>& values) {
    return compute_envelope(dim, nodes, values).pieces;
}

PLConvexFunction::PLConvexFunction(std::vector<Point> nodes, std::vector<double> values,
                                   ConvexBody body)
    : dim_(body.dim()),
      nodes_(std::move(nodes)),
      values_(std::move(values)),
      body_(std::move(body)),
      node_hull_(ConvexBody::empty_body(dim_)) {
    if (body_.is_empty()) throw ValidationError("InvalidBody", "recession body is empty");
    if (dim_ < 1 || dim_ > 2)
        throw ValidationError("UnsupportedDimension", "functions live in dimension 1 or 2");
    if (nodes_.empty()) throw ValidationError("InvalidGrid", "node list is empty");
    if (values_.size() != nodes_.size())
        throw ValidationError("InvalidGrid", "one value per node required");
    for (const auto& p : nodes_) {
        if (int(p.size()) != dim_) throw ValidationError("DimensionMismatch", "node dimension mismatch");
        for (double c : p)
            if (!std::isfinite(c)) throw ValidationError("InvalidGrid", "non-finite node coordinate");
    }
    for (double v : values_)
        if (!std::isfinite(v)) throw ValidationError("InvalidGrid", "non-finite node value");

    std::vector<int> idx(nodes_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return nodes_[a] < nodes_[b]; });
    for (size_t i = 0; i + 1 < idx.size(); ++i) {
        const Point& a = nodes_[idx[i]];
        const Point& b = nodes_[idx[i + 1]];
        bool same = true;
        for (int k = 0; k < dim_; ++k)
            if (std::abs(a[k] - b[k]) > 1e-12) { same = false; break; }
        if (same) throw ValidationError("InvalidGrid", "duplicate nodes");
    }

    node_hull_ = ConvexBody(dim_, nodes_);

    boundary_.assign(nodes_.size(), false);
    if (node_hull_.is_degenerate()) {
        boundary_.assign(nodes_.size(), true);
    } else if (dim_ == 1) {
        double lo = node_hull_.vertices().front()[0];
        double hi = node_hull_.vertices().back()[0];
        for (size_t i = 0; i < nodes_.size(); ++i)
            boundary_[i] = std::abs(nodes_[i][0] - lo) <= kTol || std::abs(nodes_[i][0] - hi) <= kTol;
    } else {
        const auto& hv = node_hull_.vertices();
        for (size_t i = 0; i < nodes_.size(); ++i)
            for (size_t e = 0; e < hv.size() && !boundary_[i]; ++e)
                if (seg_dist(hv[e], hv[(e + 1) % hv.size()], nodes_[i]) <= kTol) boundary_[i] = true;
    }

    EnvelopeData ed = compute_envelope(dim_, nodes_, values_);
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] - ed.env[i] > kTol)
            throw ValidationError("NonConvexData", "node values do not lie on their convex envelope");
    pieces_ = std::move(ed.pieces);
}

double eval(const PLConvexFunction& h, const Point& x) {
    if (int(x.size()) != h.dim())
        throw ValidationError("DimensionMismatch", "evaluation point dimension mismatch");
    if (!h.node_hull().is_degenerate() && !h.pieces().empty() && h.node_hull().contains(x, kTol)) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& pc : h.pieces()) {
            double s = pc.offset;
            for (int k = 0; k < h.dim(); ++k) s += pc.slope[k] * x[k];
            best = std::max(best, s);
        }
        return best;
    }
    size_t j = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < h.size(); ++i) {
        double d = 0;
        for (int k = 0; k < h.dim(); ++k) d += (x[k] - h.nodes()[i][k]) * (x[k] - h.nodes()[i][k]);
        if (d < bd) { bd = d; j = i; }
    }
    Point rel(h.dim());
    for (int k = 0; k < h.dim(); ++k) rel[k] = x[k] - h.nodes()[j][k];
    return h.values()[j] + support(h.body(), rel);
}

double reference_potential(double r, const Point& x) {
    if (!(r > 0)) throw ValidationError("InvalidParameter", "reference scale r must be positive");
    if (x.empty() || x.size() > 3)
        throw ValidationError("UnsupportedDimension", "reference potential takes 1-3 coordinates");
    double M = 0;
    for (double c : x) M = std::max(M, 2 * c);
    double s = std::exp(-M);
    for (double c : x) s += std::exp(2 * c - M);
    return 0.5 * r * (M + std::log(s));
}

PLConvexFunction sample_support(const ConvexBody& P, std::vector<Point> nodes) {
    std::vector<double> vals;
    vals.reserve(nodes.size());
    for (const auto& x : nodes) vals.push_back(support(P, x));
    return PLConvexFunction(std::move(nodes), std::move(vals), P);
}

namespace {

// map each node of u to its position in v's node list; tolerance 1e-12
std::vector<int> match_nodes(const PLConvexFunction& u, const PLConvexFunction& v) {
    if (u.dim() != v.dim())
        throw ValidationError("DimensionMismatch", "functions live in different dimensions");
    if (u.size() != v.size())
        throw ValidationError("IncompatibleGrids", "functions are sampled on different node sets");
    size_t n = u.size();
    std::vector<int> iu(n), iv(n);
    std::iota(iu.begin(), iu.end(), 0);
    std::iota(iv.begin(), iv.end(), 0);
    std::sort(iu.begin(), iu.end(), [&](int a, int b) { return u.nodes()[a] < u.nodes()[b]; });
    std::sort(iv.begin(), iv.end(), [&](int a, int b) { return v.nodes()[a] < v.nodes()[b]; });
    std::vector<int> map(n);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = u.nodes()[iu[i]];
        const Point& b = v.nodes()[iv[i]];
        for (int k = 0; k < u.dim(); ++k)
            if (std::abs(a[k] - b[k]) > 1e-12)
                throw ValidationError("IncompatibleGrids", "functions are sampled on different node sets");
        map[iu[i]] = iv[i];
    }
    return map;
}

}  // namespace

PLConvexFunction rooftop(const PLConvexFunction& u, const PLConvexFunction& v) {
    std::vector<int> map = match_nodes(u, v);
    std::vector<double> vals(u.size());
    for (size_t i = 0; i < u.size(); ++i) vals[i] = std::min(u.values()[i], v.values()[size_t(map[i])]);
    ConvexBody body = intersect(u.body(), v.body());
    if (body.is_empty())
        throw ValidationError("InvalidBody", "recession bodies do not intersect");
    std::vector<double> env = envelope_values(u.dim(), u.nodes(), vals);
    return PLConvexFunction(u.nodes(), std::move(env), std::move(body));
}

PLConvexFunction singularity_envelope(const PLConvexFunction& psi, const PLConvexFunction& chi,
                                      double tol) {
    if (!(tol > 0)) throw ValidationError("InvalidParameter", "tolerance must be positive");
    auto lifted = [&](double C) {
        std::vector<double> vals = psi.values();
        for (double& v : vals) v += C;
        return rooftop(PLConvexFunction(psi.nodes(), std::move(vals), psi.body()), chi);
    };
    double C = 1;
    PLConvexFunction prev = lifted(C);
    for (int it = 0; it < 60; ++it) {
        C *= 2;
        PLConvexFunction cur = lifted(C);
        double diff = 0;
        for (size_t i = 0; i < cur.size(); ++i)
            diff = std::max(diff, std::abs(cur.values()[i] - prev.values()[i]));
        if (diff <= tol) return cur;
        prev = std::move(cur);
    }
    throw ConvergenceError("NoStabilization", "lifted rooftop iteration did not stabilize");
}

std::vector<Point> grid_nodes(int dim, double box_radius, double mesh) {
    if (dim < 1 || dim > 2) throw ValidationError("UnsupportedDimension", "grids live in dimension 1 or 2");
    if (!(box_radius > 0) || !(mesh > 0))
        throw ValidationError("InvalidGrid", "box radius and mesh must be positive");
    long long N = std::llround(2 * box_radius / mesh);
    if (N < 1) N = 1;
    double count = std::pow(double(N + 1), dim);
    if (count > 2e6) throw ValidationError("InvalidGrid", "grid too large");
    std::vector<double> axis(size_t(N) + 1);
    for (long long i = 0; i <= N; ++i) axis[size_t(i)] = -box_radius + 2 * box_radius * double(i) / double(N);
    axis.front() = -box_radius;
    axis.back() = box_radius;
    std::vector<Point> out;
    if (dim == 1) {
        for (double x : axis) out.push_back({x});
    } else {
        out.reserve(axis.size() * axis.size());
        for (double y : axis)
            for (double x : axis) out.push_back({x, y});
    }
    return out;
}

ModelCheck is_model(const PLConvexFunction& h, double r, std::vector<GridSpec> schedule) {
    if (!(r > 0)) throw ValidationError("InvalidParameter", "reference scale r must be positive");
    if (schedule.empty()) {
        if (h.dim() == 1) {
            for (int k = 3; k <= 8; ++k) schedule.push_back({double(1 << k), std::pow(2.0, 3 - k)});
        } else {
            for (int k = 2; k <= 5; ++k) schedule.push_back({double(1 << k), 1.0});
        }
    }
    if (schedule.size() < 4)
        throw ValidationError("InvalidGrid", "refinement schedule needs at least 4 levels");

    ConvexBody chi_body = h.dim() == 1
                              ? ConvexBody(1, {{0.0}, {r}})
                              : ConvexBody(2, {{0.0, 0.0}, {r, 0.0}, {0.0, r}});
    std::vector<double> m;
    for (const GridSpec& g : schedule) {
        std::vector<Point> nodes = grid_nodes(h.dim(), g.box_radius, g.mesh);
        std::vector<double> psi_raw(nodes.size()), chi_vals(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) {
            psi_raw[i] = eval(h, nodes[i]);
            chi_vals[i] = reference_potential(r, nodes[i]);
        }
        // resampling can bend slightly at the hull boundary; clamp to the envelope
        std::vector<double> psi_env = envelope_values(h.dim(), nodes, psi_raw);
        PLConvexFunction psi(nodes, psi_env, h.body());
        PLConvexFunction chi(nodes, chi_vals, chi_body);
        PLConvexFunction env = singularity_envelope(psi, chi, 1e-8);
        double mk = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < nodes.size(); ++i)
            mk = std::max(mk, env.values()[i] - psi.values()[i]);
        m.push_back(mk);
    }
    int streak = 0;
    bool growing = false;
    for (size_t k = 0; k + 1 < m.size(); ++k) {
        double s0 = m[k] - m[0];
        double s1 = m[k + 1] - m[0];
        bool event = (s1 >= 1.1 * s0 - 1e-12) && (s1 - s0 > 1e-6);
        streak = event ? streak + 1 : 0;
        if (streak >= 3) growing = true;
    }
    return {!growing, m.back()};
}

std::vector<double> legendre(const PLConvexFunction& h, const std::vector<Point>& dual_grid) {
    std::vector<double> out;
    out.reserve(dual_grid.size());
    for (const Point& p : dual_grid) {
        if (int(p.size()) != h.dim())
            throw ValidationError("DimensionMismatch", "dual point dimension mismatch");
        double best = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < h.size(); ++i) {
            double s = -h.values()[i];
            for (int k = 0; k < h.dim(); ++k) s += p[k] * h.nodes()[i][k];
            best = std::max(best, s);
        }
        out.push_back(best);
    }
    return out;
}

}  // namespace toric
