#ifndef BQA_CORE_SWEEP_HPP
#define BQA_CORE_SWEEP_HPP

#include <optional>
#include <vector>

#include "minimize.hpp"

namespace bqa {

// Per-grid-point record of an order-parameter sweep.
struct SweepResult {
    std::vector<double> s;
    std::vector<Angles> angles_min;
    std::vector<double> m;
    std::vector<double> v_min;

    std::size_t size() const { return s.size(); }
};

// Minimizes the potential at every grid point. Each point keeps the better
// of a fresh global search and a continuation refined from the previous
// point's minimizer, so sweeps do not lock into a metastable branch across
// first-order points. s_grid must be strictly increasing within [0, 1].
SweepResult sweep(const Schedule& sched, const ModelParams& params,
                  const std::vector<double>& s_grid,
                  const MinimizeOptions& opt = {});

enum class TransitionKind { none, first_order, second_order, first_and_second };

struct TransitionReport {
    TransitionKind kind = TransitionKind::none;
    std::optional<double> s_first;   // midpoint of the jump interval
    double jump = 0.0;               // order-parameter jump at s_first
    std::optional<double> s_second;  // first grid point with m > onset_eps
};

// First-order: first adjacent pair with m[i+1] - m[i] > jump_threshold.
// Second-order: first departure of m from zero that is not itself a jump.
// Throws std::invalid_argument when the grid spacing exceeds 1e-2.
TransitionReport classify_transitions(const SweepResult& result,
                                      double jump_threshold = 0.05,
                                      double onset_eps = 1e-3);

const char* to_string(TransitionKind kind);

// Parametric locus (A(theta), B(theta)) on which phi_min departs from pi/2
// continuously:
//   A = 4 C sin^3(th/2) / cos(th/2),
//   B = 2 (C sin^2(th/2) sin th - A cos th) / sin th.
// Requires C > 0, chi = 0, and every theta strictly inside (0, pi).
struct SecondOrderPoint {
    double theta;
    double A;
    double B;
};

std::vector<SecondOrderPoint> second_order_curve(
    const ModelParams& params, const std::vector<double>& theta_grid);

// Order parameter over raw (A, B) coefficients (schedule bypassed); row-major
// with A as the slow index. Requires chi = 0.
struct PhaseDiagramAB {
    std::vector<double> a_grid;
    std::vector<double> b_grid;
    std::vector<MinimizeResult> cells;  // a-major

    const MinimizeResult& at(std::size_t ia, std::size_t ib) const {
        return cells[ia * b_grid.size() + ib];
    }
};

PhaseDiagramAB phase_diagram_ab(const ModelParams& params,
                                const std::vector<double>& a_grid,
                                const std::vector<double>& b_grid,
                                const MinimizeOptions& opt = {});

// First-order transition location against catalyst amplitude: one sweep and
// classification per C over a uniform s grid of the given resolution.
struct PhaseScPoint {
    double C;
    std::optional<double> s_first;
    double jump = 0.0;
};

std::vector<PhaseScPoint> phase_diagram_sc(
    const Schedule& sched, int p, const std::vector<double>& c_grid,
    double s_resolution, double s_min = 0.0, double s_max = 1.0,
    double jump_threshold = 0.05, double onset_eps = 1e-3,
    const MinimizeOptions& opt = {});

// Uniform grid helper (n >= 2 points, both endpoints included).
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace bqa

#endif
