#include "toric/mixedvol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "toric/errors.hpp"

namespace toric {
namespace {

void enumerate_exponents(int k, int n, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == k - 1) {
        cur.push_back(n - std::accumulate(cur.begin(), cur.end(), 0));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int used = std::accumulate(cur.begin(), cur.end(), 0);
    for (int d = 0; d <= n - used; ++d) {
        cur.push_back(d);
        enumerate_exponents(k, n, cur, out);
        cur.pop_back();
    }
}

ConvexBody weighted_sum(const std::vector<ConvexBody>& bodies, const std::vector<double>& t) {
    ConvexBody acc = scale_body(bodies[0], t[0]);
    for (std::size_t i = 1; i < bodies.size(); ++i)
        acc = minkowski_sum(acc, scale_body(bodies[i], t[i]));
    return acc;
}

// solve M x = b by Gaussian elimination with partial pivoting
std::vector<double> solve_dense(std::vector<std::vector<double>> M, std::vector<double> b) {
    std::size_t m = M.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) < 1e-14)
            throw ConvergenceError("FitResidual", "interpolation matrix is singular");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            double f = M[r][col] / M[col][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < m; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(m);
    for (std::size_t ri = m; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < m; ++c) s -= M[ri][c] * x[c];
        x[ri] = s / M[ri][ri];
    }
    return x;
}

double monomial(const std::vector<double>& t, const std::vector<int>& e) {
    double v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int p = 0; p < e[i]; ++p) v *= t[i];
    return v;
}

}  // namespace

double VolumePolynomial::eval(const std::vector<double>& t) const {
    if (int(t.size()) != k)
        throw ValidationError("DimensionMismatch", "one weight per body required");
    double v = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) v += coeffs[i] * monomial(t, exponents[i]);
    return v;
}

double VolumePolynomial::coefficient(const std::vector<int>& expo) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] == expo) return coeffs[i];
    throw ValidationError("InvalidParameter", "exponent not part of the polynomial");
}

VolumePolynomial volume_polynomial(const std::vector<ConvexBody>& bodies) {
    if (bodies.empty()) throw ValidationError("InvalidParameter", "at least one body required");
    int n = bodies[0].dim();
    for (const auto& b : bodies) {
        if (b.dim() != n) throw ValidationError("DimensionMismatch", "bodies must share a dimension");
        if (b.is_empty()) throw ValidationError("InvalidBody", "bodies must be nonempty");
    }
    int k = int(bodies.size());
    if (k > n + 1) throw ValidationError("InvalidParameter", "at most n + 1 bodies supported");

    VolumePolynomial poly;
    poly.n = n;
    poly.k = k;
    std::vector<int> cur;
    enumerate_exponents(k, n, cur, poly.exponents);

    // interpolation points t = d + 1 lie on the plane sum(t) = n + k, a
    // principal lattice of the simplex, which is unisolvent for degree n
    std::size_t m = poly.exponents.size();
    std::vector<std::vector<double>> M(m, std::vector<double>(m));
    std::vector<double> b(m);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<double> t(k);
        for (int i = 0; i < k; ++i) t[std::size_t(i)] = poly.exponents[r][std::size_t(i)] + 1.0;
        for (std::size_t c = 0; c < m; ++c) M[r][c] = monomial(t, poly.exponents[c]);
        b[r] = volume(weighted_sum(bodies, t));
    }
    poly.coeffs = solve_dense(std::move(M), std::move(b));

    // re-check on the full lattice: any residual signals a geometry bug
    std::vector<int> idx(std::size_t(k), 0);
    double worst = 0;
    for (;;) {
        std::vector<double> t(k);
        for (int i = 0; i < k; ++i) t[std::size_t(i)] = idx[std::size_t(i)] + 1.0;
        worst = std::max(worst, std::abs(poly.eval(t) - volume(weighted_sum(bodies, t))));
        int i = 0;
        while (i < k && ++idx[std::size_t(i)] > n) idx[std::size_t(i++)] = 0;
        if (i == k) break;
    }
    poly.fit_residual = worst;
    if (worst > 1e-8)
        throw ConvergenceError("FitResidual", "volume polynomial fit residual above threshold");
    return poly;
}

double mixed_volume(const std::vector<ConvexBody>& bodies) {
    if (bodies.empty()) throw ValidationError("InvalidParameter", "at least one body required");
    int n = bodies[0].dim();
    if (int(bodies.size()) != n)
        throw ValidationError("InvalidParameter", "exactly n bodies of dimension n required");
    VolumePolynomial poly = volume_polynomial(bodies);
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return poly.coefficient(std::vector<int>(std::size_t(n), 1)) / fact;
}

BMCheck brunn_minkowski_check(const std::vector<ConvexBody>& bodies) {
    if (bodies.empty()) throw ValidationError("InvalidParameter", "at least one body required");
    int n = bodies[0].dim();
    if (int(bodies.size()) != n)
        throw ValidationError("InvalidParameter", "exactly n bodies of dimension n required");
    BMCheck out;
    out.rhs = 1;
    for (const auto& body : bodies) {
        double v = volume(body);
        if (v <= 0) throw ValidationError("InvalidBody", "bodies must have positive volume");
        out.rhs *= std::pow(v, 1.0 / n);
    }
    out.lhs = mixed_volume(bodies);
    out.holds = out.lhs >= out.rhs - 1e-9;
    return out;
}

bool log_concavity_check(const ConvexBody& P0, const ConvexBody& P1,
                         const std::vector<double>& t_samples) {
    if (P0.dim() != P1.dim())
        throw ValidationError("DimensionMismatch", "bodies must share a dimension");
    int n = P0.dim();
    double v0 = volume(P0), v1 = volume(P1);
    if (v0 <= 0 || v1 <= 0)
        throw ValidationError("InvalidBody", "bodies must have positive volume");
    auto vol_at = [&](double t) {
        return volume(minkowski_sum(scale_body(P1, t), scale_body(P0, 1 - t)));
    };
    for (double t : t_samples) {
        if (t < 0 || t > 1)
            throw ValidationError("InvalidParameter", "samples must lie in [0, 1]");
        double lhs = std::pow(vol_at(t), 1.0 / n);
        double rhs = t * std::pow(v1, 1.0 / n) + (1 - t) * std::pow(v0, 1.0 / n);
        if (lhs < rhs - 1e-9) return false;
    }
    // concavity of log Vol along the segment, by second differences
    std::vector<double> logs;
    for (int i = 0; i <= 10; ++i) logs.push_back(std::log(vol_at(i / 10.0)));
    for (std::size_t i = 1; i + 1 < logs.size(); ++i)
        if (logs[i - 1] - 2 * logs[i] + logs[i + 1] > 1e-9) return false;
    return true;
}

double mixed_area_2d(const ConvexBody& P, const ConvexBody& Q) {
    if (P.dim() != 2 || Q.dim() != 2)
        throw ValidationError("UnsupportedDimension", "edge decomposition needs dimension 2");
    if (P.is_empty() || Q.is_empty())
        throw ValidationError("InvalidBody", "bodies must be nonempty");
    const auto& vs = P.vertices();
    if (vs.size() < 2) return 0.0;
    double acc = 0;
    auto edge_term = [&](const Point& a, const Point& b) {
        double ex = b[0] - a[0], ey = b[1] - a[1];
        double len = std::hypot(ex, ey);
        if (len < 1e-15) return 0.0;
        return support(Q, {ey / len, -ex / len}) * len;  // outer normal of a CCW edge
    };
    if (vs.size() == 2) {
        acc = edge_term(vs[0], vs[1]) + edge_term(vs[1], vs[0]);
    } else {
        for (std::size_t i = 0; i < vs.size(); ++i) acc += edge_term(vs[i], vs[(i + 1) % vs.size()]);
    }
    return 0.5 * acc;
}

}  // namespace toric
