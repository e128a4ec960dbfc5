#include "toric/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <cstdio>
#include <cstdlib>

namespace toric {
namespace {

using detail::P2;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BBox {
    double lox, loy, hix, hiy;
};

BBox poly_bbox(const std::vector<P2>& poly) {
    BBox b{kInf, kInf, -kInf, -kInf};
    for (const auto& p : poly) {
        b.lox = std::min(b.lox, p[0]);
        b.loy = std::min(b.loy, p[1]);
        b.hix = std::max(b.hix, p[0]);
        b.hiy = std::max(b.hiy, p[1]);
    }
    return b;
}

bool bbox_overlap(const BBox& a, const BBox& b) {
    return a.lox <= b.hix + 1e-9 && b.lox <= a.hix + 1e-9 &&
           a.loy <= b.hiy + 1e-9 && b.loy <= a.hiy + 1e-9;
}

// coordinatewise-lowering engine over atoms plus a pinned Dirichlet frame
struct Engine {
    int dim;
    double scale;
    std::vector<Point> nodes;  // atoms first
    std::vector<double> v;
    std::vector<double> target;
    std::size_t A;

    // node coordinates split per axis; scan loops read these
    std::vector<double> nx, ny;

    // 2-D state
    std::vector<P2> bodyPoly;
    std::vector<std::vector<P2>> poly;  // cached atom cells
    std::vector<BBox> bb;               // bounding boxes of cached cells
    // 1-D state
    double plo = 0, phi = 0;
    std::vector<std::pair<double, double>> iv;

    std::vector<double> mass;
    std::vector<long> version;
    long adjustments = 0;

    // spatial buckets over the fixed node set (2-D fast path)
    int G = 0;
    double blox = 0, bloy = 0, bw = 1, bh = 1;
    std::vector<std::vector<int>> bucket;

    void build_buckets() {
        if (dim != 2) return;
        double hix = -kInf, hiy = -kInf;
        blox = kInf;
        bloy = kInf;
        for (const auto& p : nodes) {
            blox = std::min(blox, p[0]);
            bloy = std::min(bloy, p[1]);
            hix = std::max(hix, p[0]);
            hiy = std::max(hiy, p[1]);
        }
        G = std::clamp(int(std::sqrt(double(nodes.size()))), 4, 128);
        bw = std::max(hix - blox, 1e-9) / G;
        bh = std::max(hiy - bloy, 1e-9) / G;
        bucket.assign(std::size_t(G) * G, {});
        for (std::size_t i = 0; i < nodes.size(); ++i)
            bucket[cell_of(nodes[i])].push_back(int(i));
    }

    std::size_t cell_of(const Point& p) const {
        int cx = std::clamp(int((p[0] - blox) / bw), 0, G - 1);
        int cy = std::clamp(int((p[1] - bloy) / bh), 0, G - 1);
        return std::size_t(cy) * G + cx;
    }

    // nearby node indices (excluding i), grown ring by ring until enough found
    void gather_near(std::size_t i, std::vector<int>& out) const {
        out.clear();
        int cx = std::clamp(int((nodes[i][0] - blox) / bw), 0, G - 1);
        int cy = std::clamp(int((nodes[i][1] - bloy) / bh), 0, G - 1);
        for (int r = 0; r < G; ++r) {
            for (int y = std::max(0, cy - r); y <= std::min(G - 1, cy + r); ++y)
                for (int x = std::max(0, cx - r); x <= std::min(G - 1, cx + r); ++x) {
                    if (r > 0 && std::abs(x - cx) != r && std::abs(y - cy) != r) continue;
                    for (int j : bucket[std::size_t(y) * G + x])
                        if (std::size_t(j) != i) out.push_back(j);
                }
            if (out.size() >= 40) break;
        }
    }

    // 2-D cell of node i at value vi: clip by nearby nodes first, then by every
    // constraint the resulting bounding box cannot prove redundant
    std::vector<P2> cell2(std::size_t i, double vi, std::vector<int>& scratch) const {
        std::vector<P2> p = bodyPoly;
        gather_near(i, scratch);
        for (int j : scratch) {
            if (p.empty()) return p;
            double dx = nodes[i][0] - nodes[std::size_t(j)][0];
            double dy = nodes[i][1] - nodes[std::size_t(j)][1];
            detail::clip_halfplane(p, dx, dy, vi - v[std::size_t(j)]);
        }
        if (p.empty()) return p;
        BBox b = poly_bbox(p);
        const double xi = nx[i], yi = ny[i];
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            double dx = xi - nx[j];
            double dy = yi - ny[j];
            double c = vi - v[j];
            double mn = std::min(b.lox * dx, b.hix * dx) + std::min(b.loy * dy, b.hiy * dy);
            if (mn >= c - 1e-12 * (1 + std::abs(c))) continue;
            detail::clip_halfplane(p, dx, dy, c);
            if (p.empty()) return p;
            b = poly_bbox(p);
        }
        return p;
    }

    std::pair<double, double> cell1(std::size_t i, double vi) const {
        double lo = plo, hi = phi;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            double d = nx[j] - nx[i];
            double c = (v[j] - vi) / d;
            if (d > 0) hi = std::min(hi, c);
            else lo = std::max(lo, c);
        }
        return {lo, hi};
    }

    double mass_of2(const std::vector<P2>& p) const { return scale * detail::polygon_area(p); }
    double mass_of1(const std::pair<double, double>& c) const {
        return c.second > c.first ? scale * (c.second - c.first) : 0.0;
    }

    void refresh_atom(std::size_t i, std::vector<int>& scratch) {
        if (dim == 2) {
            poly[i] = cell2(i, v[i], scratch);
            mass[i] = mass_of2(poly[i]);
            bb[i] = poly_bbox(poly[i]);
        } else {
            iv[i] = cell1(i, v[i]);
            mass[i] = mass_of1(iv[i]);
        }
        ++version[i];
    }

    // cell node i would have at value w, restricted to the given competitor
    // list (exact while the cell stays inside the box the list was built from)
    std::vector<P2> probe_poly(std::size_t i, double w, const std::vector<int>& js) const {
        std::vector<P2> p = bodyPoly;
        for (int j : js) {
            double dx = nodes[i][0] - nodes[std::size_t(j)][0];
            double dy = nodes[i][1] - nodes[std::size_t(j)][1];
            detail::clip_halfplane(p, dx, dy, w - v[std::size_t(j)]);
            if (p.empty()) break;
        }
        return p;
    }

    double probe_mass1(std::size_t i, double w) const { return mass_of1(cell1(i, w)); }

    // competitors that could cut any cell of node i with value <= whigh; the
    // box must contain the cell at the lowest value probed (the largest cell)
    std::vector<int> competitors(std::size_t i, double whigh, const BBox& b) const {
        std::vector<int> js;
        if (dim == 1) {
            js.reserve(nodes.size() - 1);
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (j != i) js.push_back(int(j));
            return js;
        }
        const double xi = nx[i], yi = ny[i];
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            double dx = xi - nx[j];
            double dy = yi - ny[j];
            double c = whigh - v[j];
            double mn = std::min(b.lox * dx, b.hix * dx) + std::min(b.loy * dy, b.hiy * dy);
            if (mn >= c - 1e-12 * (1 + std::abs(c))) continue;
            js.push_back(int(j));
        }
        return js;
    }

    // lower v[i] until its cell mass meets the target (within ltol)
    bool lower_to_target(std::size_t i, double ltol, std::vector<int>& scratch) {
        if (dim == 1) return lower_to_target_1d(i, ltol);
        double w0 = v[i], m0 = mass[i];
        if (m0 >= target[i] - ltol) return true;
        // bracket: extrapolate from the last two probes, fall back to doubling
        double wp = w0, mp = m0;  // last probe below target
        double w = w0, m = m0;
        double step = std::max(1e-3 * (1 + std::abs(w0)), 1e-9);
        std::vector<P2> plow;
        double wlo = w0, mlo = m0;
        bool bracketed = false;
        for (int k = 0; k < 200; ++k) {
            double wn;
            if (m > mp + 1e-300 && w < wp) {
                double d = (m - mp) / (wp - w);
                double extra = (target[i] - m) / d;
                wn = w - std::max(1.25 * extra, step);
                step = std::max(step, 1.25 * extra);
            } else {
                wn = w - step;
                step *= 4;
            }
            std::vector<P2> p = cell2(i, wn, scratch);
            double mn = mass_of2(p);
            if (mn >= target[i]) {
                wlo = wn;
                mlo = mn;
                plow = std::move(p);
                bracketed = true;
                break;
            }
            wp = w;
            mp = m;
            w = wn;
            m = mn;
        }
        if (!bracketed) return false;
        std::vector<int> js = competitors(i, w, poly_bbox(plow));
        auto commit = [&](double wf, std::vector<P2>&& pf, double mf) {
            v[i] = wf;
            poly[i] = std::move(pf);
            mass[i] = mf;
            bb[i] = poly_bbox(poly[i]);
            ++version[i];
        };
        if (mlo <= target[i] + ltol) { commit(wlo, std::move(plow), mlo); return true; }
        // regula falsi with periodic bisection on [wlo, w] (mass >= / < target)
        double whi = w, fhi = m, flo = mlo;
        for (int it = 0; it < 100; ++it) {
            double wm;
            if (it % 3 == 2 || flo <= fhi) wm = 0.5 * (wlo + whi);
            else {
                wm = whi + (wlo - whi) * (target[i] - fhi) / (flo - fhi);
                double guard = 1e-3 * (whi - wlo);
                wm = std::clamp(wm, wlo + guard, whi - guard);
            }
            std::vector<P2> p = probe_poly(i, wm, js);
            double mm = mass_of2(p);
            if (std::abs(mm - target[i]) <= ltol || whi - wlo <= 1e-16 * (1 + std::abs(wm))) {
                if (mm >= target[i] - ltol) { commit(wm, std::move(p), mm); return true; }
                commit(wlo, std::move(plow), mlo);
                return true;
            }
            if (mm >= target[i]) {
                wlo = wm;
                flo = mlo = mm;
                plow = std::move(p);
            } else {
                whi = wm;
                fhi = mm;
            }
        }
        commit(wlo, std::move(plow), mlo);
        return true;
    }

    bool lower_to_target_1d(std::size_t i, double ltol) {
        double whi = v[i], mhi = mass[i];
        if (mhi >= target[i] - ltol) return true;
        double step = std::max(1e-4 * (1 + std::abs(whi)), 1e-9);
        double wlo = whi, mlo = mhi;
        bool bracketed = false;
        for (int k = 0; k < 200; ++k) {
            wlo = whi - step;
            mlo = probe_mass1(i, wlo);
            if (mlo >= target[i]) { bracketed = true; break; }
            step *= 4;
        }
        if (!bracketed) return false;
        double flo = mlo, fhi = mhi;
        double w = wlo;
        for (int it = 0; it < 100 && std::abs(flo - target[i]) > ltol; ++it) {
            if (it % 3 == 2 || flo <= fhi) w = 0.5 * (wlo + whi);
            else {
                w = whi + (wlo - whi) * (target[i] - fhi) / (flo - fhi);
                double guard = 1e-3 * (whi - wlo);
                w = std::clamp(w, wlo + guard, whi - guard);
            }
            double m = probe_mass1(i, w);
            if (m >= target[i]) { wlo = w; flo = m; }
            else { whi = w; fhi = m; }
            if (whi - wlo <= 1e-16 * (1 + std::abs(w))) break;
        }
        v[i] = wlo;
        iv[i] = cell1(i, wlo);
        mass[i] = mass_of1(iv[i]);
        ++version[i];
        return true;
    }

    // exact min over the body of max_j(<p, x_j> - v_j): cells tile the body and
    // the objective is affine on each cell, so cell corners suffice
    double min_dual_gap(std::vector<int>& scratch) {
        double best = kInf;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (dim == 2) {
                std::vector<P2> p = cell2(i, v[i], scratch);
                for (const auto& q : p)
                    best = std::min(best, q[0] * nodes[i][0] + q[1] * nodes[i][1] - v[i]);
            } else {
                auto c = cell1(i, v[i]);
                if (c.first > c.second + 1e-12) continue;
                best = std::min(best, c.first * nodes[i][0] - v[i]);
                best = std::min(best, c.second * nodes[i][0] - v[i]);
            }
        }
        return best;
    }
};

struct QEntry {
    double deficit;
    int idx;
    long version;
};
bool operator<(const QEntry& a, const QEntry& b) {
    if (a.deficit != b.deficit) return a.deficit < b.deficit;
    return a.idx > b.idx;  // lowest index wins ties
}

std::vector<Point> frame_nodes(int dim, double R, std::size_t natoms) {
    std::vector<Point> out;
    if (dim == 1) {
        out.push_back({-R});
        out.push_back({R});
        return out;
    }
    std::size_t K = std::max<std::size_t>(9, std::size_t(std::ceil(std::sqrt(double(natoms)))) + 1);
    for (std::size_t s = 0; s < K; ++s) {
        double t = -R + 2 * R * double(s) / double(K - 1);
        out.push_back({t, -R});
        out.push_back({t, R});
        out.push_back({-R, t});
        out.push_back({R, t});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_measure(const ConvexBody& P, const DiscreteMeasure& mu, double box_radius) {
    if (P.dim() < 1 || P.dim() > 2)
        throw ValidationError("UnsupportedDimension", "solver covers dimensions 1 and 2");
    if (P.is_empty() || volume(P) <= 1e-12)
        throw ValidationError("InvalidBody", "body must have positive volume");
    if (mu.atoms.empty()) throw ValidationError("InvalidGrid", "measure needs at least one atom");
    if (mu.masses.size() != mu.atoms.size())
        throw ValidationError("InvalidGrid", "one mass per atom required");
    double r_atoms = 0;
    for (const auto& a : mu.atoms) {
        if (int(a.size()) != P.dim())
            throw ValidationError("DimensionMismatch", "atom dimension mismatch");
        for (double c : a) {
            if (!std::isfinite(c)) throw ValidationError("InvalidGrid", "non-finite atom coordinate");
            r_atoms = std::max(r_atoms, std::abs(c));
        }
    }
    for (double m : mu.masses)
        if (!(m > 0) || !std::isfinite(m))
            throw ValidationError("InvalidParameter", "atom masses must be positive");
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < mu.atoms.size(); ++j) {
            bool same = true;
            for (int k = 0; k < P.dim(); ++k)
                if (std::abs(mu.atoms[i][k] - mu.atoms[j][k]) > 1e-12) { same = false; break; }
            if (same) throw ValidationError("InvalidGrid", "duplicate atoms");
        }
    if (!(box_radius > 0) || box_radius <= 2 * r_atoms)
        throw ValidationError("InvalidGrid", "box radius must exceed twice the atom support radius");
}

// shared engine run: lower atoms until every |cell mass - target| <= tol
void run_engine(Engine& e, double tol, int& iterations) {
    std::vector<int> scratch;
    for (std::size_t i = 0; i < e.A; ++i) e.refresh_atom(i, scratch);

    std::priority_queue<QEntry> q;
    auto push = [&](std::size_t i) {
        double d = e.target[i] - e.mass[i];
        if (d > 0) q.push({d, int(i), e.version[i]});
    };
    for (std::size_t i = 0; i < e.A; ++i) push(i);

    long cap = 20000 + 200 * long(e.A) + long(60.0 * std::pow(double(e.A), 1.5));
    if (const char* s = std::getenv("TORIC_MA_CAP")) cap = std::atol(s);
    // coarse-to-fine: drain deficits at a scale, tighten geometrically
    double maxdef = 0;
    for (std::size_t i = 0; i < e.A; ++i) maxdef = std::max(maxdef, e.target[i] - e.mass[i]);
    double eps_d = std::max(0.5 * tol, 0.125 * maxdef);
    for (int phase = 0; phase < 60; ++phase) {
        while (!q.empty()) {
            QEntry top = q.top();
            q.pop();
            std::size_t i = std::size_t(top.idx);
            if (top.version != e.version[i]) { push(i); continue; }
            if (top.deficit <= eps_d) continue;
            if (++e.adjustments > cap)
                throw ConvergenceError("NonConvergence", "adjustment budget exhausted");
            ++iterations;
            if (!e.lower_to_target(i, 0.25 * eps_d, scratch))
                throw ConvergenceError("NonConvergence", "cell mass cannot reach its target");
            push(i);
            // neighbors bordering the grown cell lose exactly the tightened
            // constraint from i; clip their cached cells in place
            if (e.dim == 2) {
                for (std::size_t j = 0; j < e.A; ++j) {
                    if (j == i || e.poly[j].empty()) continue;
                    if (!bbox_overlap(e.bb[j], e.bb[i])) continue;
                    double dx = e.nodes[j][0] - e.nodes[i][0];
                    double dy = e.nodes[j][1] - e.nodes[i][1];
                    detail::clip_halfplane(e.poly[j], dx, dy, e.v[j] - e.v[i]);
                    e.mass[j] = e.mass_of2(e.poly[j]);
                    e.bb[j] = poly_bbox(e.poly[j]);
                    ++e.version[j];
                    push(j);
                }
            } else {
                for (std::size_t j = 0; j < e.A; ++j) {
                    if (j == i) continue;
                    auto& c = e.iv[j];
                    if (c.first > c.second) continue;
                    if (c.second >= e.iv[i].first - 1e-12 && e.iv[i].second >= c.first - 1e-12) {
                        e.refresh_atom(j, scratch);
                        push(j);
                    }
                }
            }
        }
        // queue drained: verify against fresh masses and tighten if needed
        double residual = 0;
        for (std::size_t i = 0; i < e.A; ++i) {
            e.refresh_atom(i, scratch);
            residual = std::max(residual, std::abs(e.mass[i] - e.target[i]));
        }
        bool deficits = false;
        for (std::size_t i = 0; i < e.A; ++i)
            if (e.target[i] - e.mass[i] > eps_d) { deficits = true; push(i); }
        if (std::getenv("TORIC_MA_TRACE"))
            std::fprintf(stderr, "phase %d eps %.3e adj %ld residual %.3e\n", phase, eps_d,
                         e.adjustments, residual);
        if (!deficits) {
            if (residual <= tol) return;
            eps_d = std::min(eps_d * 0.25, 0.125 * residual);
            for (std::size_t i = 0; i < e.A; ++i) push(i);
        }
    }
    throw ConvergenceError("NonConvergence", "residual did not reach the tolerance");
}

Engine make_engine(const ConvexBody& P, const DiscreteMeasure& mu, double box_radius,
                   const std::vector<double>& targets) {
    Engine e;
    e.dim = P.dim();
    e.scale = ma_scale(e.dim);
    e.nodes = mu.atoms;
    e.A = mu.atoms.size();
    e.target = targets;
    std::vector<Point> frame = frame_nodes(e.dim, box_radius, e.A);
    for (auto& f : frame) e.nodes.push_back(std::move(f));
    e.v.resize(e.nodes.size());
    e.nx.resize(e.nodes.size());
    e.ny.assign(e.nodes.size(), 0.0);
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        e.v[i] = support(P, e.nodes[i]);
        e.nx[i] = e.nodes[i][0];
        if (e.dim == 2) e.ny[i] = e.nodes[i][1];
    }
    if (e.dim == 2) {
        for (const auto& p : P.vertices()) e.bodyPoly.push_back({p[0], p[1]});
        e.poly.assign(e.A, {});
        e.bb.assign(e.A, BBox{kInf, kInf, -kInf, -kInf});
    } else {
        e.plo = P.vertices().front()[0];
        e.phi = P.vertices().back()[0];
        e.iv.assign(e.A, {0, 0});
    }
    e.mass.assign(e.A, 0.0);
    e.version.assign(e.A, 0);
    e.build_buckets();
    return e;
}

SolveReport finish_report(Engine& e, const ConvexBody& P, int iterations,
                          const std::string& normalization, double shift_extra = 0.0) {
    std::vector<int> scratch;
    double s = e.min_dual_gap(scratch) + shift_extra;
    for (double& w : e.v) w += s;
    double residual = 0;
    for (std::size_t i = 0; i < e.A; ++i) {
        e.refresh_atom(i, scratch);
        residual = std::max(residual, std::abs(e.mass[i] - e.target[i]));
    }
    std::vector<double> env = envelope_values(e.dim, e.nodes, e.v);
    PLConvexFunction sol(e.nodes, std::move(env), P);
    return SolveReport{std::move(sol), residual, iterations, normalization};
}

}  // namespace

SolveReport solve_ma(const ConvexBody& P, const DiscreteMeasure& mu, double box_radius, double tol) {
    validate_measure(P, mu, box_radius);
    if (!(tol > 0)) throw ValidationError("InvalidParameter", "tolerance must be positive");
    double total = ma_scale(P.dim()) * volume(P);
    double sum = std::accumulate(mu.masses.begin(), mu.masses.end(), 0.0);
    if (std::abs(sum - total) > 1e-9)
        throw ValidationError("MassMismatch", "masses must sum to the total measure of the body");
    Engine e = make_engine(P, mu, box_radius, mu.masses);
    int iterations = 0;
    run_engine(e, tol, iterations);
    return finish_report(e, P, iterations, "sup(h - h_P) = 0");
}

SolveReport solve_aubin_yau(const ConvexBody& P, const DiscreteMeasure& mu, double lambda,
                            double box_radius, double tol) {
    validate_measure(P, mu, box_radius);
    if (!(tol > 0)) throw ValidationError("InvalidParameter", "tolerance must be positive");
    if (!(lambda > 0)) throw ValidationError("InvalidParameter", "lambda must be positive");
    double total = ma_scale(P.dim()) * volume(P);
    std::size_t A = mu.atoms.size();
    std::vector<double> phi(A);
    for (std::size_t i = 0; i < A; ++i) phi[i] = support(P, mu.atoms[i]);
    double inner_tol = std::max(tol * 0.1, 1e-13);
    double stop_tol = std::max(tol * 0.02 / std::max(lambda, 1.0), 1e-13);
    int total_inner = 0;
    for (int outer = 1; outer <= 200; ++outer) {
        std::vector<double> w(A);
        double wsum = 0;
        for (std::size_t i = 0; i < A; ++i) {
            w[i] = mu.masses[i] * std::exp(lambda * phi[i]);
            wsum += w[i];
        }
        if (!(wsum > 0) || !std::isfinite(wsum))
            throw ConvergenceError("NonConvergence", "reweighted masses degenerated");
        double c = total / wsum;
        DiscreteMeasure inner{mu.atoms, w};
        for (double& m : inner.masses) m *= c;
        SolveReport rep = solve_ma(P, inner, box_radius, inner_tol);
        total_inner += rep.iterations;
        double delta = 0;
        std::vector<double> u(A);
        for (std::size_t i = 0; i < A; ++i) {
            u[i] = rep.solution.values()[i];  // atoms lead the node list
            delta = std::max(delta, std::abs(u[i] - phi[i]));
        }
        for (std::size_t i = 0; i < A; ++i) phi[i] = 0.5 * phi[i] + 0.5 * u[i];
        if (delta <= stop_tol) {
            double shift = std::log(c) / lambda;
            std::vector<double> vals = rep.solution.values();
            for (double& x : vals) x += shift;
            PLConvexFunction sol(rep.solution.nodes(), std::move(vals), P);
            MAResult m = ma(sol);
            double residual = 0;
            for (std::size_t i = 0; i < A; ++i)
                residual = std::max(residual,
                                    std::abs(m.masses[i] - std::exp(lambda * sol.values()[i]) * mu.masses[i]));
            if (residual <= tol)
                return SolveReport{std::move(sol), residual, outer, "equation-normalized"};
            stop_tol *= 0.5;
        }
    }
    throw ConvergenceError("NonConvergence", "fixed-point iteration did not settle");
}

std::vector<double> uniform_bound_diagnostic(const ConvexBody& P, const DensityBox& density,
                                             const std::vector<int>& levels) {
    if (P.dim() < 1 || P.dim() > 2)
        throw ValidationError("UnsupportedDimension", "diagnostic covers dimensions 1 and 2");
    int dim = P.dim();
    if (int(density.lo.size()) != dim || int(density.hi.size()) != dim)
        throw ValidationError("DimensionMismatch", "density box dimension mismatch");
    for (int k = 0; k < dim; ++k)
        if (!(density.lo[k] < density.hi[k]))
            throw ValidationError("InvalidGrid", "density box must have positive extent");
    double total = ma_scale(dim) * volume(P);
    if (std::abs(density.total - total) > 1e-9)
        throw ValidationError("MassMismatch", "density total must match the body's full mass");
    double r_box = 0;
    for (int k = 0; k < dim; ++k)
        r_box = std::max({r_box, std::abs(density.lo[k]), std::abs(density.hi[k])});
    double R = 2 * r_box + 1;
    std::vector<double> out;
    for (int k : levels) {
        if (k < 1 || k > 16) throw ValidationError("InvalidGrid", "refinement level out of range");
        long side = 1L << k;
        double count = std::pow(double(side), dim);
        if (count > 20000) throw ValidationError("InvalidGrid", "refinement level too fine");
        DiscreteMeasure mu;
        double m = density.total / count;
        if (dim == 1) {
            for (long i = 0; i < side; ++i) {
                double x = density.lo[0] + (density.hi[0] - density.lo[0]) * (double(i) + 0.5) / double(side);
                mu.atoms.push_back({x});
                mu.masses.push_back(m);
            }
        } else {
            for (long iy = 0; iy < side; ++iy)
                for (long ix = 0; ix < side; ++ix) {
                    double x = density.lo[0] + (density.hi[0] - density.lo[0]) * (double(ix) + 0.5) / double(side);
                    double y = density.lo[1] + (density.hi[1] - density.lo[1]) * (double(iy) + 0.5) / double(side);
                    mu.atoms.push_back({x, y});
                    mu.masses.push_back(m);
                }
        }
        double tol_k = std::max(1e-10, m * 1e-3);
        SolveReport rep = solve_ma(P, mu, R, tol_k);
        double D = 0;
        for (std::size_t i = 0; i < rep.solution.size(); ++i)
            D = std::max(D, support(P, rep.solution.nodes()[i]) - rep.solution.values()[i]);
        out.push_back(D);
    }
    return out;
}

}  // namespace toric
