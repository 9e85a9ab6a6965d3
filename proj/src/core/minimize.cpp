#include "minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "constants.hpp"

namespace bqa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTie = 1e-10;  // coexistence tie window on v_min

double sq(double x) { return x * x; }

double clamp1(double x, double lo, double hi) {
    return std::min(std::max(x, lo), hi);
}

// Golden-section minimum of fn on [a, b]; returns the best probed value.
double golden_min(const std::function<double(double)>& fn, double a, double b,
                  double xtol, double& xm) {
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = fn(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = fn(x2);
        }
    }
    if (f1 < f2) {
        xm = x1;
        return f1;
    }
    xm = x2;
    return f2;
}

struct TopCell {
    double v;
    int cell;
    double w;  // inner relative phase (4-D scans only)
};

// Fixed-capacity ascending list of the best grid cells.
class TopK {
  public:
    explicit TopK(int k) : k_(k) { items_.reserve(k); }

    void offer(double v, int cell, double w = 0.0) {
        if (static_cast<int>(items_.size()) < k_) {
            items_.push_back({v, cell, w});
            std::push_heap(items_.begin(), items_.end(), less_);
        } else if (v < items_.front().v) {
            std::pop_heap(items_.begin(), items_.end(), less_);
            items_.back() = {v, cell, w};
            std::push_heap(items_.begin(), items_.end(), less_);
        }
    }

    std::vector<TopCell> sorted() const {
        std::vector<TopCell> out = items_;
        std::sort(out.begin(), out.end(),
                  [](const TopCell& a, const TopCell& b) { return a.v < b.v; });
        return out;
    }

  private:
    static bool less_(const TopCell& a, const TopCell& b) { return a.v < b.v; }
    int k_;
    std::vector<TopCell> items_;
};

}  // namespace

PotentialTables::PotentialTables(const ModelParams& params,
                                 const MinimizeOptions& opt)
    : params_(params), opt_(opt) {
    validate(params);
    full_ = (params.chi != 0.0) || opt.force_full_search;
    nt_ = std::max(2, opt.theta_points);
    nf_ = std::max(2, opt.phi_points);

    theta_.resize(nt_);
    for (int i = 0; i < nt_; ++i)
        theta_[i] = (i == nt_ - 1) ? kPi : kPi * i / (nt_ - 1);
    phi_.resize(nf_);
    for (int j = 0; j < nf_; ++j)
        phi_[j] = (j == nf_ - 1) ? 0.5 * kPi : 0.5 * kPi * j / (nf_ - 1);

    const int cells = nt_ * nf_;
    det_.resize(cells);
    drv_.resize(cells);
    fix_.resize(cells);
    if (full_) {
        dp_.resize(cells);
        dq_.resize(cells);
        cat_.resize(cells);
        prb_.resize(cells);
        w1_.resize(cells);
    }
    const double schi = std::sin(params.chi);

    for (int i = 0; i < nt_; ++i) {
        const double th = theta_[i];
        const double sh = std::sin(0.5 * th);
        const double s2 = sh * sh;
        const double st = std::sin(th);
        for (int j = 0; j < nf_; ++j) {
            const double ph = phi_[j];
            const int c = i * nf_ + j;
            const double dp = -st * std::cos(0.5 * ph) * kInvSqrt2;
            const double dq = -st * std::sin(0.5 * ph) * kInvSqrt2;
            const double cat = params.C * sq(s2 * std::sin(ph));
            const double prb = -ipow(s2 * std::cos(ph), params.p);
            det_[c] = -s2;
            drv_[c] = dp + dq;
            fix_[c] = cat + prb;
            if (full_) {
                dp_[c] = dp;
                dq_[c] = dq;
                cat_[c] = cat;
                prb_[c] = prb;
                w1_[c] = -std::sqrt(
                    std::max(0.0, dp * dp + dq * dq - 2.0 * dp * dq * schi));
            }
        }
    }

    if (full_) {
        const int nw = std::max(8, opt.w_points);
        wgrid_.resize(nw);
        cosw_.resize(nw);
        cos2wchi_.resize(nw);
        for (int k = 0; k < nw; ++k) {
            const double w = -kPi + 2.0 * kPi * k / nw;
            wgrid_[k] = w;
            cosw_[k] = std::cos(w);
            cos2wchi_[k] = sq(std::cos(w - params.chi));
        }
    }
}

double refine_box(const std::function<double(const double*)>& fn, int n,
                  double* x, const double* lo, const double* hi, double step0,
                  double v_tol, double x_tol) {
    // Nelder-Mead with trial points clamped into the box.
    const int m = n + 1;
    double pts[5][4];
    double fv[5];
    for (int d = 0; d < n; ++d) pts[0][d] = clamp1(x[d], lo[d], hi[d]);
    fv[0] = fn(pts[0]);
    for (int i = 1; i < m; ++i) {
        for (int d = 0; d < n; ++d) pts[i][d] = pts[0][d];
        const int d = i - 1;
        double st = step0;
        if (pts[i][d] + st > hi[d]) st = -step0;
        pts[i][d] = clamp1(pts[i][d] + st, lo[d], hi[d]);
        fv[i] = fn(pts[i]);
    }

    const int max_iter = 400 * n;
    int order[5];
    for (int it = 0; it < max_iter; ++it) {
        for (int i = 0; i < m; ++i) order[i] = i;
        std::sort(order, order + m,
                  [&](int a, int b) { return fv[a] < fv[b]; });
        const int ib = order[0], iw = order[m - 1], is = order[m - 2];

        double diam = 0.0;
        for (int i = 0; i < m; ++i)
            for (int d = 0; d < n; ++d)
                diam = std::max(diam, std::abs(pts[i][d] - pts[ib][d]));
        const double spread = fv[iw] - fv[ib];
        if (diam <= x_tol &&
            spread <= std::max(v_tol, 1e-14 * std::abs(fv[ib])))
            break;

        double cen[4] = {0, 0, 0, 0};
        for (int i = 0; i < m; ++i) {
            if (i == iw) continue;
            for (int d = 0; d < n; ++d) cen[d] += pts[i][d];
        }
        for (int d = 0; d < n; ++d) cen[d] /= n;

        double xr[4], xe[4], xc[4];
        for (int d = 0; d < n; ++d)
            xr[d] = clamp1(2.0 * cen[d] - pts[iw][d], lo[d], hi[d]);
        const double fr = fn(xr);

        if (fr < fv[ib]) {
            for (int d = 0; d < n; ++d)
                xe[d] = clamp1(cen[d] + 2.0 * (xr[d] - cen[d]), lo[d], hi[d]);
            const double fe = fn(xe);
            if (fe < fr) {
                std::copy(xe, xe + n, pts[iw]);
                fv[iw] = fe;
            } else {
                std::copy(xr, xr + n, pts[iw]);
                fv[iw] = fr;
            }
        } else if (fr < fv[is]) {
            std::copy(xr, xr + n, pts[iw]);
            fv[iw] = fr;
        } else {
            const bool outside = fr < fv[iw];
            if (outside) {
                for (int d = 0; d < n; ++d)
                    xc[d] =
                        clamp1(cen[d] + 0.5 * (xr[d] - cen[d]), lo[d], hi[d]);
            } else {
                for (int d = 0; d < n; ++d)
                    xc[d] = cen[d] + 0.5 * (pts[iw][d] - cen[d]);
            }
            const double fc = fn(xc);
            if (fc < std::min(fr, fv[iw])) {
                std::copy(xc, xc + n, pts[iw]);
                fv[iw] = fc;
            } else {
                for (int i = 0; i < m; ++i) {
                    if (i == ib) continue;
                    for (int d = 0; d < n; ++d)
                        pts[i][d] =
                            pts[ib][d] + 0.5 * (pts[i][d] - pts[ib][d]);
                    fv[i] = fn(pts[i]);
                }
            }
        }
    }

    int ib = 0;
    for (int i = 1; i < m; ++i)
        if (fv[i] < fv[ib]) ib = i;
    for (int d = 0; d < n; ++d) x[d] = pts[ib][d];
    double fbest = fv[ib];

    // Cyclic golden-section polish; repairs boundary-flattened simplices.
    for (const double h : {1e-4, 1e-6, 3e-8}) {
        for (int d = 0; d < n; ++d) {
            const double a = std::max(lo[d], x[d] - h);
            const double b = std::min(hi[d], x[d] + h);
            if (b - a < 1e-15) continue;
            auto line = [&](double t) {
                double y[4];
                std::copy(x, x + n, y);
                y[d] = t;
                return fn(y);
            };
            double tm;
            const double fm = golden_min(line, a, b, std::max(1e-4 * h, 1e-13), tm);
            if (fm < fbest) {
                fbest = fm;
                x[d] = tm;
            }
        }
    }
    return fbest;
}

namespace {

double wrap_pi(double x) { return std::remainder(x, 2.0 * kPi); }

MinimizeResult refine_seed(const PotentialTables& t, double A, double B,
                           const Angles& seed) {
    const ModelParams& par = t.params();
    const MinimizeOptions& opt = t.options();
    const double step0 = kPi / (t.theta_count() - 1);
    if (!t.full_search()) {
        double x[2] = {seed.theta, seed.phi};
        const double lo[2] = {0.0, 0.0};
        const double hi[2] = {kPi, 0.5 * kPi};
        auto fn = [&](const double* y) {
            return potential_ab(A, B, par, {y[0], y[1], 0.0, 0.0});
        };
        const double v =
            refine_box(fn, 2, x, lo, hi, step0, opt.v_tol, opt.angle_tol);
        return {{x[0], x[1], 0.0, 0.0}, v};
    }
    double x[4] = {seed.theta, seed.phi, seed.alpha, seed.beta};
    const double lo[4] = {0.0, 0.0, -kPi, -kPi};
    const double hi[4] = {kPi, 0.5 * kPi, kPi, kPi};
    auto fn = [&](const double* y) {
        return potential_ab(A, B, par, {y[0], y[1], y[2], y[3]});
    };
    const double v =
        refine_box(fn, 4, x, lo, hi, step0, opt.v_tol, opt.angle_tol);
    return {{x[0], x[1], x[2], x[3]}, v};
}

// Coexisting minima within kTie resolve toward the smaller order parameter.
MinimizeResult pick_best(const std::vector<MinimizeResult>& cands) {
    double vbest = std::numeric_limits<double>::infinity();
    for (const auto& c : cands) vbest = std::min(vbest, c.v_min);
    const MinimizeResult* sel = nullptr;
    double msel = 0.0;
    for (const auto& c : cands) {
        if (c.v_min > vbest + kTie) continue;
        const double mc = order_parameter(c.angles);
        if (sel == nullptr || mc < msel - 1e-12) {
            sel = &c;
            msel = mc;
        } else if (std::abs(mc - msel) <= 1e-12) {
            const auto key = [](const Angles& a) {
                return std::array<double, 4>{a.theta, a.phi, a.alpha, a.beta};
            };
            if (key(c.angles) < key(sel->angles)) sel = &c;
        }
    }
    return *sel;
}

// alpha/beta attaining the inner driver minimum for relative phase w.
void recover_phases(double P, double Q, double w, double chi, double& alpha,
                    double& beta) {
    const double zr = P * std::cos(w) + Q;
    const double zi = P * std::sin(w);
    double v = 0.0;
    if (std::abs(zr) + std::abs(zi) > 1e-300) v = kPi - std::atan2(zi, zr);
    const double u = v + w;
    alpha = wrap_pi(u - 0.5 * chi);
    beta = wrap_pi(v + 0.5 * chi);
}

MinimizeResult minimize_2d(const PotentialTables& t, double A, double B,
                           const Angles* hint) {
    const int cells = t.theta_count() * t.phi_count();
    const double* drv = t.drv_.data();
    const double* det = t.det_.data();
    const double* fix = t.fix_.data();
    TopK top(std::max(1, t.options().top_k));
    for (int c = 0; c < cells; ++c)
        top.offer(A * drv[c] + B * det[c] + fix[c], c);

    std::vector<MinimizeResult> cands;
    const int nf = t.phi_count();
    for (const TopCell& tc : top.sorted()) {
        const Angles seed{t.theta(tc.cell / nf), t.phi(tc.cell % nf), 0.0,
                          0.0};
        cands.push_back(refine_seed(t, A, B, seed));
    }
    // Domain corners where the ordered branch terminates.
    cands.push_back(refine_seed(t, A, B, {kPi, 0.0, 0.0, 0.0}));
    cands.push_back(refine_seed(t, A, B, {kPi, 0.5 * kPi, 0.0, 0.0}));
    if (hint != nullptr)
        cands.push_back(refine_seed(t, A, B, {hint->theta, hint->phi, 0.0, 0.0}));
    return pick_best(cands);
}

MinimizeResult minimize_4d(const PotentialTables& t, double A, double B,
                           const Angles* hint) {
    const int cells = t.theta_count() * t.phi_count();
    const int nf = t.phi_count();
    const double chi = t.params().chi;
    const double Aa = std::abs(A);
    const double cos2chi = sq(std::cos(chi));
    const double* drv = t.drv_.data();
    const double* det = t.det_.data();
    const double* cat = t.cat_.data();
    const double* prb = t.prb_.data();
    const double* w1 = t.w1_.data();
    const double* dp = t.dp_.data();
    const double* dq = t.dq_.data();
    const int nw = static_cast<int>(t.wgrid_.size());
    const double dw = 2.0 * kPi / nw;

    // Upper bound tau: exact values at the driver-aligned and catalyst-free
    // relative phases.
    double tau = std::numeric_limits<double>::infinity();
    for (int c = 0; c < cells; ++c) {
        const double base = B * det[c] + prb[c];
        const double vw0 = Aa * drv[c] + cat[c] * cos2chi + base;
        const double vw1 = Aa * w1[c] + base;
        tau = std::min(tau, std::min(vw0, vw1));
    }

    // Cells whose lower bound beats tau may host the global minimum.
    struct Surv {
        double vlow;
        int cell;
    };
    std::vector<Surv> survivors;
    const double slack0 = 1e-9 * (1.0 + std::abs(tau));
    for (int c = 0; c < cells; ++c) {
        const double vlow = Aa * drv[c] + std::min(0.0, cat[c]) +
                            B * det[c] + prb[c];
        if (vlow <= tau + slack0) survivors.push_back({vlow, c});
    }
    std::sort(survivors.begin(), survivors.end(),
              [](const Surv& a, const Surv& b) { return a.vlow < b.vlow; });

    TopK top(std::max(1, t.options().top_k));
    double best = std::numeric_limits<double>::infinity();
    for (const Surv& sv : survivors) {
        if (best < std::numeric_limits<double>::infinity() &&
            sv.vlow > best + 1e-9 * (1.0 + std::abs(best)))
            break;
        const int c = sv.cell;
        const double P = A * dp[c], Q = A * dq[c];
        const double p2 = P * P + Q * Q, pq = 2.0 * P * Q;
        const double R = cat[c];
        const double rest = B * det[c] + prb[c];

        int kb = 0;
        double gb = std::numeric_limits<double>::infinity();
        for (int k = 0; k < nw; ++k) {
            const double g = -std::sqrt(std::max(0.0, p2 + pq * t.cosw_[k])) +
                             R * t.cos2wchi_[k] + rest;
            if (g < gb) {
                gb = g;
                kb = k;
            }
        }
        auto gw = [&](double w) {
            return -std::sqrt(std::max(0.0, p2 + pq * std::cos(w))) +
                   R * sq(std::cos(w - chi)) + rest;
        };
        double wm;
        const double gm = golden_min(gw, t.wgrid_[kb] - dw, t.wgrid_[kb] + dw,
                                     1e-11, wm);
        top.offer(gm, c, wm);
        best = std::min(best, gm);
    }

    std::vector<MinimizeResult> cands;
    for (const TopCell& tc : top.sorted()) {
        const int c = tc.cell;
        Angles seed{t.theta(c / nf), t.phi(c % nf), 0.0, 0.0};
        recover_phases(A * dp[c], A * dq[c], tc.w, chi, seed.alpha, seed.beta);
        cands.push_back(refine_seed(t, A, B, seed));
    }
    cands.push_back(refine_seed(
        t, A, B, {kPi, 0.0, wrap_pi(-0.5 * chi), wrap_pi(0.5 * chi)}));
    cands.push_back(refine_seed(
        t, A, B, {kPi, 0.5 * kPi, wrap_pi(-0.5 * chi), wrap_pi(0.5 * chi)}));
    if (hint != nullptr) cands.push_back(refine_seed(t, A, B, *hint));
    return pick_best(cands);
}

}  // namespace

MinimizeResult minimize_with_tables(const PotentialTables& t, double A,
                                    double B, const Angles* hint) {
    return t.full_search() ? minimize_4d(t, A, B, hint)
                           : minimize_2d(t, A, B, hint);
}

MinimizeResult local_refine(const PotentialTables& t, double A, double B,
                            const Angles& seed) {
    return refine_seed(t, A, B, seed);
}

MinimizeResult minimize_potential_ab(double A, double B,
                                     const ModelParams& params,
                                     const Angles* hint,
                                     const MinimizeOptions& opt) {
    PotentialTables tables(params, opt);
    return minimize_with_tables(tables, A, B, hint);
}

MinimizeResult minimize_potential(const Schedule& sched,
                                  const ModelParams& params, double s,
                                  const Angles* hint,
                                  const MinimizeOptions& opt) {
    validate(sched);
    const ScheduleValue ab = schedule_eval(sched, s);
    return minimize_potential_ab(ab.A, ab.B, params, hint, opt);
}

}  // namespace bqa
