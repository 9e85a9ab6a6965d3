#ifndef BQA_CORE_MINIMIZE_HPP
#define BQA_CORE_MINIMIZE_HPP

#include <functional>
#include <vector>

#include "model.hpp"
#include "potential.hpp"
#include "schedule.hpp"

namespace bqa {

struct MinimizeOptions {
    int theta_points = 512;  // coarse grid on [0, pi]
    int phi_points = 256;    // coarse grid on [0, pi/2]
    int w_points = 256;      // relative-phase scan when the search is 4-D
    int top_k = 8;           // grid cells refined locally
    double v_tol = 1e-12;
    double angle_tol = 1e-8;
    // Search alpha/beta even when chi == 0 (cross-validation of the
    // fixed alpha = beta = 0 production path).
    bool force_full_search = false;
};

struct MinimizeResult {
    Angles angles;
    double v_min = 0.0;
};

// Coarse-grid tables of the potential's A-, B- and angle-only parts for one
// parameter set; building them once makes an s sweep a stream of fused
// multiply-adds per grid cell. Members are open for the scan kernels.
struct PotentialTables {
    PotentialTables(const ModelParams& params, const MinimizeOptions& opt);

    const ModelParams& params() const { return params_; }
    const MinimizeOptions& options() const { return opt_; }
    bool full_search() const { return full_; }

    double theta(int i) const { return theta_[i]; }
    double phi(int j) const { return phi_[j]; }
    int theta_count() const { return nt_; }
    int phi_count() const { return nf_; }

    ModelParams params_;
    MinimizeOptions opt_;
    bool full_;
    int nt_, nf_;
    std::vector<double> theta_, phi_;
    // per cell, flattened theta-major
    std::vector<double> det_;  // -sin^2(th/2); multiplies B
    std::vector<double> drv_;  // alpha=beta=0 driver coefficient; multiplies A
    std::vector<double> fix_;  // catalyst(alpha=beta=0) + p-spin part
    // 4-D extras
    std::vector<double> dp_, dq_;  // split driver coefficients
    std::vector<double> cat_;      // C (sin^2(th/2) sin(phi))^2
    std::vector<double> prb_;      // p-spin part alone
    std::vector<double> w1_;       // driver coefficient at catalyst-free phase
    // relative-phase grid
    std::vector<double> wgrid_, cosw_, cos2wchi_;
};

// Global minimum of the semiclassical potential at raw coefficients (A, B)
// over the restricted angle domain. Deterministic: coarse grid, local
// refinement of the best cells (and of `hint` when given), ties at 1e-10
// resolved toward the smaller order parameter.
MinimizeResult minimize_with_tables(const PotentialTables& tables, double A,
                                    double B, const Angles* hint = nullptr);

MinimizeResult minimize_potential_ab(double A, double B,
                                     const ModelParams& params,
                                     const Angles* hint = nullptr,
                                     const MinimizeOptions& opt = {});

// Schedule-coupled entry; validates s and the parameter set.
MinimizeResult minimize_potential(const Schedule& sched,
                                  const ModelParams& params, double s,
                                  const Angles* hint = nullptr,
                                  const MinimizeOptions& opt = {});

// Derivative-free local refinement (Nelder-Mead plus a coordinate polish)
// from a single seed; exposed for the sweep continuation pass.
MinimizeResult local_refine(const PotentialTables& tables, double A, double B,
                            const Angles& seed);

// Box-constrained Nelder-Mead followed by cyclic golden-section polish.
// Generic over the objective so invariance tests can wrap the potential.
double refine_box(const std::function<double(const double*)>& fn, int n,
                  double* x, const double* lo, const double* hi, double step0,
                  double v_tol, double x_tol);

}  // namespace bqa

#endif
