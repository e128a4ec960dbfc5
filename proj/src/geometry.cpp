#include "toric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace toric {
namespace {

constexpr double kHullTol = 1e-9;

void check_finite(const std::vector<Point>& pts) {
    for (const auto& p : pts)
        for (double c : p)
            if (!std::isfinite(c)) throw ValidationError("InvalidBody", "non-finite vertex coordinate");
}

double cross2(const detail::P2& o, const detail::P2& a, const detail::P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

using A3 = std::array<double, 3>;

A3 sub3(const A3& a, const A3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
A3 cross3(const A3& a, const A3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot3(const A3& a, const A3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const A3& a) { return std::sqrt(dot3(a, a)); }

// one face of the incremental hull; plane normal is unit length, outward
struct Face {
    int a, b, c;
    A3 n;
    double off;
    bool alive;
};

Face make_face(const std::vector<A3>& pts, int a, int b, int c, const A3& interior) {
    A3 n = cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a]));
    double len = norm3(n);
    if (len > 0) n = {n[0] / len, n[1] / len, n[2] / len};
    if (dot3(n, sub3(interior, pts[a])) > 0) {
        std::swap(b, c);
        n = {-n[0], -n[1], -n[2]};
    }
    return Face{a, b, c, n, dot3(n, pts[a]), true};
}

}  // namespace

namespace detail {

double polygon_area(const std::vector<P2>& poly) {
    if (poly.size() < 3) return 0.0;
    // fan from the centroid
    double cx = 0, cy = 0;
    for (const auto& p : poly) { cx += p[0]; cy += p[1]; }
    cx /= double(poly.size());
    cy /= double(poly.size());
    double a = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& u = poly[i];
        const auto& v = poly[(i + 1) % poly.size()];
        a += (u[0] - cx) * (v[1] - cy) - (u[1] - cy) * (v[0] - cx);
    }
    return 0.5 * a;
}

void clip_halfplane(std::vector<P2>& poly, double nx, double ny, double c) {
    if (poly.empty()) return;
    const double eps = 1e-12 * (1.0 + std::abs(c));
    std::vector<P2> out;
    out.reserve(poly.size() + 2);
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const P2& u = poly[i];
        const P2& v = poly[(i + 1) % m];
        double su = nx * u[0] + ny * u[1] - c;
        double sv = nx * v[0] + ny * v[1] - c;
        bool in_u = su >= -eps;
        bool in_v = sv >= -eps;
        if (in_u) out.push_back(u);
        if (in_u != in_v) {
            double t = su / (su - sv);
            out.push_back({u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])});
        }
    }
    // drop near-duplicate consecutive points produced by grazing cuts
    std::vector<P2> clean;
    clean.reserve(out.size());
    for (const auto& p : out) {
        if (clean.empty()) { clean.push_back(p); continue; }
        const P2& q = clean.back();
        if (std::abs(p[0] - q[0]) > 1e-12 || std::abs(p[1] - q[1]) > 1e-12) clean.push_back(p);
    }
    if (clean.size() >= 2) {
        const P2& f = clean.front();
        const P2& l = clean.back();
        if (std::abs(f[0] - l[0]) <= 1e-12 && std::abs(f[1] - l[1]) <= 1e-12) clean.pop_back();
    }
    poly.swap(clean);
}

std::vector<P2> hull2(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const P2& a, const P2& b) {
                              return std::abs(a[0] - b[0]) <= 1e-12 && std::abs(a[1] - b[1]) <= 1e-12;
                          }),
              pts.end());
    size_t m = pts.size();
    if (m <= 2) return pts;
    std::vector<P2> h(2 * m);
    size_t k = 0;
    for (size_t i = 0; i < m; ++i) {  // lower chain
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= kHullTol) --k;
        h[k++] = pts[i];
    }
    for (size_t i = m - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= kHullTol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && std::abs(h[0][0] - h[1][0]) <= 1e-12 && std::abs(h[0][1] - h[1][1]) <= 1e-12)
        h.pop_back();
    return h;
}

std::vector<std::array<int, 3>> hull3_facets(const std::vector<A3>& input) {
    std::vector<A3> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const A3& a, const A3& b) {
                              return std::abs(a[0] - b[0]) <= 1e-12 && std::abs(a[1] - b[1]) <= 1e-12 &&
                                     std::abs(a[2] - b[2]) <= 1e-12;
                          }),
              pts.end());
    size_t m = pts.size();
    if (m < 4) return {};
    double scale = 1.0;
    for (const auto& p : pts)
        for (double c : p) scale = std::max(scale, std::abs(c));
    const double eps = kHullTol * scale;

    // extreme initial tetrahedron
    size_t i1 = 0;
    double best = -1;
    for (size_t i = 1; i < m; ++i) {
        double d = norm3(sub3(pts[i], pts[0]));
        if (d > best) { best = d; i1 = i; }
    }
    if (best <= eps) return {};
    size_t i2 = 0;
    best = -1;
    A3 d01 = sub3(pts[i1], pts[0]);
    for (size_t i = 0; i < m; ++i) {
        double d = norm3(cross3(sub3(pts[i], pts[0]), d01));
        if (d > best) { best = d; i2 = i; }
    }
    if (best <= eps * norm3(d01)) return {};
    A3 n012 = cross3(d01, sub3(pts[i2], pts[0]));
    double ln = norm3(n012);
    n012 = {n012[0] / ln, n012[1] / ln, n012[2] / ln};
    size_t i3 = 0;
    best = -1;
    for (size_t i = 0; i < m; ++i) {
        double d = std::abs(dot3(n012, sub3(pts[i], pts[0])));
        if (d > best) { best = d; i3 = i; }
    }
    if (best <= eps) return {};

    A3 interior = {0, 0, 0};
    for (size_t i : {size_t(0), i1, i2, i3})
        for (int k = 0; k < 3; ++k) interior[k] += pts[i][k] / 4.0;

    std::vector<Face> faces;
    int t0 = 0, t1 = int(i1), t2 = int(i2), t3 = int(i3);
    faces.push_back(make_face(pts, t0, t1, t2, interior));
    faces.push_back(make_face(pts, t0, t1, t3, interior));
    faces.push_back(make_face(pts, t0, t2, t3, interior));
    faces.push_back(make_face(pts, t1, t2, t3, interior));

    std::vector<int> order;
    order.reserve(m);
    for (size_t i = 0; i < m; ++i)
        if (i != 0 && i != i1 && i != i2 && i != i3) order.push_back(int(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double da = norm3(sub3(pts[a], interior));
        double db = norm3(sub3(pts[b], interior));
        if (da != db) return da > db;  // far points first keeps vertex lists lean
        return a < b;
    });

    for (int pi : order) {
        const A3& p = pts[pi];
        std::vector<int> visible;
        for (size_t f = 0; f < faces.size(); ++f)
            if (faces[f].alive && dot3(faces[f].n, p) > faces[f].off + eps) visible.push_back(int(f));
        if (visible.empty()) continue;
        // horizon = directed edges of visible faces whose reverse is not visible
        std::map<std::pair<int, int>, int> edge_count;
        for (int f : visible) {
            const Face& fc = faces[f];
            int e[3][2] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
            for (auto& ed : e) edge_count[{ed[0], ed[1]}]++;
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& [ed, cnt] : edge_count) {
            (void)cnt;
            if (!edge_count.count({ed.second, ed.first})) horizon.push_back(ed);
        }
        for (int f : visible) faces[f].alive = false;
        for (const auto& [u, v] : horizon) faces.push_back(make_face(pts, u, v, pi, interior));
    }

    // map back to the caller's point indexing (first occurrence wins)
    std::vector<int> back(m, -1);
    for (size_t i = 0; i < input.size(); ++i) {
        for (size_t j = 0; j < m; ++j)
            if (back[j] < 0 && std::abs(input[i][0] - pts[j][0]) <= 1e-12 &&
                std::abs(input[i][1] - pts[j][1]) <= 1e-12 && std::abs(input[i][2] - pts[j][2]) <= 1e-12) {
                back[j] = int(i);
                break;
            }
    }
    std::vector<std::array<int, 3>> out;
    for (const Face& f : faces)
        if (f.alive) out.push_back({back[f.a], back[f.b], back[f.c]});
    return out;
}

}  // namespace detail

namespace {

std::vector<Point> canonical_1d(const std::vector<Point>& pts, bool& degenerate) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
    degenerate = (hi - lo) <= kHullTol;
    if (degenerate) return {{lo}};
    return {{lo}, {hi}};
}

std::vector<Point> canonical_2d(const std::vector<Point>& pts, bool& degenerate) {
    std::vector<detail::P2> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.push_back({p[0], p[1]});
    auto h = detail::hull2(std::move(q));
    degenerate = h.size() < 3;
    std::vector<Point> out;
    out.reserve(h.size());
    for (const auto& p : h) out.push_back({p[0], p[1]});
    return out;
}

bool inside_all_facets(const std::vector<A3>& pts, const std::vector<std::array<int, 3>>& facets,
                       const A3& x, double tol) {
    for (const auto& f : facets) {
        A3 n = cross3(sub3(pts[f[1]], pts[f[0]]), sub3(pts[f[2]], pts[f[0]]));
        double len = norm3(n);
        if (len <= 0) continue;
        n = {n[0] / len, n[1] / len, n[2] / len};
        if (dot3(n, sub3(x, pts[f[0]])) > tol) return false;
    }
    return true;
}

std::vector<Point> canonical_3d(const std::vector<Point>& pts, bool& degenerate) {
    std::vector<A3> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.push_back({p[0], p[1], p[2]});
    auto facets = detail::hull3_facets(q);
    if (!facets.empty()) {
        degenerate = false;
        std::vector<int> used;
        for (const auto& f : facets) { used.push_back(f[0]); used.push_back(f[1]); used.push_back(f[2]); }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        std::vector<A3> cand;
        for (int i : used) cand.push_back(q[i]);
        // strip vertices that lie in the hull of the others (facet corners of
        // a triangulated hull are not automatically extreme)
        if (cand.size() <= 128) {
            double scale = 1.0;
            for (const auto& p : cand)
                for (double c : p) scale = std::max(scale, std::abs(c));
            for (size_t i = 0; i < cand.size() && cand.size() > 4;) {
                std::vector<A3> rest;
                for (size_t j = 0; j < cand.size(); ++j)
                    if (j != i) rest.push_back(cand[j]);
                auto rf = detail::hull3_facets(rest);
                if (!rf.empty() && inside_all_facets(rest, rf, cand[i], kHullTol * scale))
                    cand.erase(cand.begin() + long(i));
                else
                    ++i;
            }
        }
        std::sort(cand.begin(), cand.end());
        std::vector<Point> out;
        for (const auto& p : cand) out.push_back({p[0], p[1], p[2]});
        return out;
    }
    degenerate = true;
    // lower-dimensional: find an affine basis and reduce
    double scale = 1.0;
    for (const auto& p : q)
        for (double c : p) scale = std::max(scale, std::abs(c));
    const double eps = kHullTol * scale;
    size_t far1 = 0;
    double best = -1;
    for (size_t i = 1; i < q.size(); ++i) {
        double d = norm3(sub3(q[i], q[0]));
        if (d > best) { best = d; far1 = i; }
    }
    if (best <= eps) return {pts[0]};  // a single point
    A3 u = sub3(q[far1], q[0]);
    size_t far2 = 0;
    best = -1;
    for (size_t i = 0; i < q.size(); ++i) {
        double d = norm3(cross3(sub3(q[i], q[0]), u));
        if (d > best) { best = d; far2 = i; }
    }
    if (best <= eps * norm3(u)) {
        // collinear: endpoints along u
        double lo = 0, hi = 0;
        size_t ilo = 0, ihi = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            double t = dot3(sub3(q[i], q[0]), u);
            if (t < lo) { lo = t; ilo = i; }
            if (t > hi) { hi = t; ihi = i; }
        }
        std::vector<Point> out = {pts[ilo], pts[ihi]};
        std::sort(out.begin(), out.end());
        return out;
    }
    // planar: 2-D hull in the (u, w) in-plane coordinates
    A3 nrm = cross3(u, sub3(q[far2], q[0]));
    double ln = norm3(nrm);
    nrm = {nrm[0] / ln, nrm[1] / ln, nrm[2] / ln};
    A3 ue = u;
    double lu = norm3(ue);
    ue = {ue[0] / lu, ue[1] / lu, ue[2] / lu};
    A3 we = cross3(nrm, ue);
    std::vector<detail::P2> plane;
    plane.reserve(q.size());
    for (const auto& p : q) plane.push_back({dot3(sub3(p, q[0]), ue), dot3(sub3(p, q[0]), we)});
    auto h2 = detail::hull2(plane);
    std::vector<Point> out;
    for (const auto& p : h2) {
        out.push_back({q[0][0] + p[0] * ue[0] + p[1] * we[0],
                       q[0][1] + p[0] * ue[1] + p[1] * we[1],
                       q[0][2] + p[0] * ue[2] + p[1] * we[2]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConvexBody::ConvexBody(int dim, std::vector<Point> points) {
    if (dim < 1 || dim > 3) throw ValidationError("UnsupportedDimension", "dimension must be 1, 2, or 3");
    if (points.empty()) throw ValidationError("InvalidBody", "vertex list must be nonempty");
    for (const auto& p : points)
        if (int(p.size()) != dim) throw ValidationError("DimensionMismatch", "vertex dimension mismatch");
    check_finite(points);
    dim_ = dim;
    switch (dim) {
        case 1: vertices_ = canonical_1d(points, degenerate_); break;
        case 2: vertices_ = canonical_2d(points, degenerate_); break;
        default: vertices_ = canonical_3d(points, degenerate_); break;
    }
}

ConvexBody ConvexBody::empty_body(int dim) {
    ConvexBody b;
    b.dim_ = dim;
    b.degenerate_ = true;
    return b;
}

bool ConvexBody::contains(const Point& x, double tol) const {
    if (int(x.size()) != dim_) throw ValidationError("DimensionMismatch", "point dimension mismatch");
    if (is_empty()) return false;
    if (dim_ == 1) {
        double lo = vertices_.front()[0];
        double hi = vertices_.back()[0];
        return x[0] >= lo - tol && x[0] <= hi + tol;
    }
    if (dim_ == 2) {
        if (vertices_.size() == 1)
            return std::abs(x[0] - vertices_[0][0]) <= tol && std::abs(x[1] - vertices_[0][1]) <= tol;
        if (vertices_.size() == 2) {
            detail::P2 a{vertices_[0][0], vertices_[0][1]}, b{vertices_[1][0], vertices_[1][1]};
            detail::P2 p{x[0], x[1]};
            double cr = cross2(a, b, p);
            double len = std::hypot(b[0] - a[0], b[1] - a[1]);
            if (std::abs(cr) > tol * std::max(1.0, len)) return false;
            double t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / (len * len);
            return t >= -tol && t <= 1 + tol;
        }
        size_t m = vertices_.size();
        for (size_t i = 0; i < m; ++i) {
            detail::P2 a{vertices_[i][0], vertices_[i][1]};
            detail::P2 b{vertices_[(i + 1) % m][0], vertices_[(i + 1) % m][1]};
            if (cross2(a, b, {x[0], x[1]}) < -tol * std::max(1.0, std::hypot(b[0] - a[0], b[1] - a[1])))
                return false;
        }
        return true;
    }
    // dim 3: fall back to a support-function test over a fixed direction set is
    // not exact; use facet planes when full-dimensional, else affine reduction
    std::vector<A3> q;
    for (const auto& p : vertices_) q.push_back({p[0], p[1], p[2]});
    A3 xx{x[0], x[1], x[2]};
    if (!degenerate_) {
        auto facets = detail::hull3_facets(q);
        return inside_all_facets(q, facets, xx, tol);
    }
    if (q.size() == 1)
        return norm3(sub3(xx, q[0])) <= tol;
    if (q.size() == 2) {
        A3 u = sub3(q[1], q[0]);
        double len = norm3(u);
        A3 d = sub3(xx, q[0]);
        double t = dot3(d, u) / (len * len);
        t = std::clamp(t, 0.0, 1.0);
        A3 proj = {q[0][0] + t * u[0], q[0][1] + t * u[1], q[0][2] + t * u[2]};
        return norm3(sub3(xx, proj)) <= tol;
    }
    // planar polygon: must lie on the plane and inside the 2-D hull
    A3 u = sub3(q[1], q[0]);
    A3 nrm{0, 0, 0};
    for (size_t i = 2; i < q.size(); ++i) {
        nrm = cross3(u, sub3(q[i], q[0]));
        if (norm3(nrm) > 0) break;
    }
    double ln = norm3(nrm);
    nrm = {nrm[0] / ln, nrm[1] / ln, nrm[2] / ln};
    if (std::abs(dot3(nrm, sub3(xx, q[0]))) > tol) return false;
    double lu = norm3(u);
    A3 ue = {u[0] / lu, u[1] / lu, u[2] / lu};
    A3 we = cross3(nrm, ue);
    std::vector<detail::P2> plane;
    for (const auto& p : q) plane.push_back({dot3(sub3(p, q[0]), ue), dot3(sub3(p, q[0]), we)});
    auto h2 = detail::hull2(plane);
    detail::P2 px{dot3(sub3(xx, q[0]), ue), dot3(sub3(xx, q[0]), we)};
    size_t m = h2.size();
    if (m == 1) return std::hypot(px[0] - h2[0][0], px[1] - h2[0][1]) <= tol;
    if (m == 2) {
        double cr = cross2(h2[0], h2[1], px);
        return std::abs(cr) <= tol * std::max(1.0, std::hypot(h2[1][0] - h2[0][0], h2[1][1] - h2[0][1]));
    }
    for (size_t i = 0; i < m; ++i)
        if (cross2(h2[i], h2[(i + 1) % m], px) < -tol) return false;
    return true;
}

double support(const ConvexBody& P, const Point& x) {
    if (int(x.size()) != P.dim()) throw ValidationError("DimensionMismatch", "direction dimension mismatch");
    if (P.is_empty()) throw ValidationError("InvalidBody", "support of the empty set");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : P.vertices()) {
        double s = std::inner_product(v.begin(), v.end(), x.begin(), 0.0);
        best = std::max(best, s);
    }
    return best;
}

ConvexBody minkowski_sum(const ConvexBody& P, const ConvexBody& Q) {
    if (P.dim() != Q.dim()) throw ValidationError("DimensionMismatch", "Minkowski sum dimension mismatch");
    if (P.is_empty() || Q.is_empty()) return ConvexBody::empty_body(P.dim());
    std::vector<Point> sums;
    sums.reserve(P.vertices().size() * Q.vertices().size());
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) {
            Point s(P.dim());
            for (int k = 0; k < P.dim(); ++k) s[k] = p[k] + q[k];
            sums.push_back(std::move(s));
        }
    return ConvexBody(P.dim(), std::move(sums));
}

double volume(const ConvexBody& P) {
    if (P.is_empty() || P.is_degenerate()) return 0.0;
    const auto& v = P.vertices();
    if (P.dim() == 1) return v.back()[0] - v.front()[0];
    if (P.dim() == 2) {
        std::vector<detail::P2> poly;
        for (const auto& p : v) poly.push_back({p[0], p[1]});
        return detail::polygon_area(poly);
    }
    std::vector<A3> q;
    for (const auto& p : v) q.push_back({p[0], p[1], p[2]});
    auto facets = detail::hull3_facets(q);
    A3 c{0, 0, 0};
    for (const auto& p : q)
        for (int k = 0; k < 3; ++k) c[k] += p[k] / double(q.size());
    double vol = 0;
    for (const auto& f : facets) {
        A3 a = sub3(q[f[0]], c), b = sub3(q[f[1]], c), d = sub3(q[f[2]], c);
        vol += dot3(a, cross3(b, d)) / 6.0;
    }
    return std::abs(vol);
}

double enclosing_simplex_radius(const ConvexBody& P) {
    if (P.is_empty()) throw ValidationError("InvalidBody", "empty body has no enclosing simplex");
    double r = 0;
    for (const auto& v : P.vertices()) {
        double s = 0;
        for (double c : v) {
            if (c < -1e-12)
                throw ValidationError("NegativeCoordinate",
                                      "body must lie in the nonnegative orthant; translate it first");
            s += c;
        }
        r = std::max(r, s);
    }
    return r;
}

ConvexBody intersect(const ConvexBody& P, const ConvexBody& Q) {
    if (P.dim() != Q.dim()) throw ValidationError("DimensionMismatch", "intersection dimension mismatch");
    if (P.dim() > 2) throw ValidationError("UnsupportedDimension", "intersection implemented for n <= 2");
    if (P.is_empty() || Q.is_empty()) return ConvexBody::empty_body(P.dim());
    if (P.dim() == 1) {
        double lo = std::max(P.vertices().front()[0], Q.vertices().front()[0]);
        double hi = std::min(P.vertices().back()[0], Q.vertices().back()[0]);
        if (lo > hi + 1e-12) return ConvexBody::empty_body(1);
        return ConvexBody(1, {{lo}, {std::max(lo, hi)}});
    }
    // clip P by each edge halfplane of Q; degenerate Q handled via its segment
    const ConvexBody* poly = &P;
    const ConvexBody* clipper = &Q;
    if (P.is_degenerate() && !Q.is_degenerate()) std::swap(poly, clipper);
    std::vector<detail::P2> cur;
    for (const auto& p : poly->vertices()) cur.push_back({p[0], p[1]});
    if (poly->is_degenerate() && clipper->is_degenerate()) {
        // segment/segment and point cases: fall back to vertex containment
        std::vector<Point> kept;
        for (const auto& p : poly->vertices())
            if (clipper->contains(p, 1e-9)) kept.push_back(p);
        for (const auto& p : clipper->vertices())
            if (poly->contains(p, 1e-9)) kept.push_back(p);
        if (kept.empty()) return ConvexBody::empty_body(2);
        return ConvexBody(2, kept);
    }
    const auto& qv = clipper->vertices();
    size_t m = qv.size();
    for (size_t i = 0; i < m && !cur.empty(); ++i) {
        const auto& a = qv[i];
        const auto& b = qv[(i + 1) % m];
        double ex = b[0] - a[0], ey = b[1] - a[1];
        // inward normal of a ccw edge
        double nx = -ey, ny = ex;
        detail::clip_halfplane(cur, nx, ny, nx * a[0] + ny * a[1]);
    }
    if (cur.empty()) return ConvexBody::empty_body(2);
    std::vector<Point> pts;
    for (const auto& p : cur) pts.push_back({p[0], p[1]});
    return ConvexBody(2, std::move(pts));
}

ConvexBody scale_body(const ConvexBody& P, double t) {
    if (P.is_empty()) return P;
    if (t < 0) throw ValidationError("InvalidBody", "negative scale factor");
    std::vector<Point> pts = P.vertices();
    for (auto& p : pts)
        for (double& c : p) c *= t;
    return ConvexBody(P.dim(), std::move(pts));
}

ConvexBody translate_body(const ConvexBody& P, const Point& t) {
    if (int(t.size()) != P.dim()) throw ValidationError("DimensionMismatch", "translation dimension mismatch");
    if (P.is_empty()) return P;
    std::vector<Point> pts = P.vertices();
    for (auto& p : pts)
        for (int k = 0; k < P.dim(); ++k) p[k] += t[k];
    return ConvexBody(P.dim(), std::move(pts));
}

}  // namespace toric
