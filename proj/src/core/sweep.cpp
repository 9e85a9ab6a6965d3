#include "sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace bqa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTie = 1e-10;

// Smaller potential wins; coexistence ties resolve toward smaller m.
const MinimizeResult& better_of(const MinimizeResult& a,
                                const MinimizeResult& b) {
    if (a.v_min < b.v_min - kTie) return a;
    if (b.v_min < a.v_min - kTie) return b;
    return order_parameter(a.angles) <= order_parameter(b.angles) ? a : b;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = (i == n - 1) ? hi : lo + (hi - lo) * i / (n - 1);
    return g;
}

SweepResult sweep(const Schedule& sched, const ModelParams& params,
                  const std::vector<double>& s_grid,
                  const MinimizeOptions& opt) {
    validate(sched);
    if (s_grid.size() < 2)
        throw std::invalid_argument("sweep: s_grid needs at least 2 points");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] >= 0.0 && s_grid[i] <= 1.0))
            throw std::domain_error("sweep: s_grid point outside [0, 1]");
        if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
            throw std::invalid_argument("sweep: s_grid not strictly increasing");
    }

    const PotentialTables tables(params, opt);
    const std::size_t n = s_grid.size();
    std::vector<ScheduleValue> ab(n);
    for (std::size_t i = 0; i < n; ++i) ab[i] = schedule_eval(sched, s_grid[i]);

    // Fresh global minimization everywhere, then a forward continuation pass
    // seeded from each previous minimizer; the better candidate wins.
    std::vector<MinimizeResult> global(n);
    parallel_for(n, [&](std::size_t i) {
        global[i] = minimize_with_tables(tables, ab[i].A, ab[i].B);
    });

    SweepResult out;
    out.s = s_grid;
    out.angles_min.resize(n);
    out.m.resize(n);
    out.v_min.resize(n);

    MinimizeResult prev = global[0];
    for (std::size_t i = 0; i < n; ++i) {
        MinimizeResult r = global[i];
        if (i > 0) {
            const MinimizeResult cont =
                local_refine(tables, ab[i].A, ab[i].B, prev.angles);
            r = better_of(r, cont);
        }
        out.angles_min[i] = r.angles;
        out.m[i] = order_parameter(r.angles);
        out.v_min[i] = r.v_min;
        prev = r;
    }
    return out;
}

TransitionReport classify_transitions(const SweepResult& result,
                                      double jump_threshold,
                                      double onset_eps) {
    const std::size_t n = result.size();
    if (n < 2)
        throw std::invalid_argument("classify_transitions: need >= 2 points");
    for (std::size_t i = 1; i < n; ++i) {
        if (result.s[i] - result.s[i - 1] > 1e-2 + 1e-12)
            throw std::invalid_argument(
                "classify_transitions: grid spacing exceeds 1e-2");
    }

    // A step above jump_threshold is a discontinuity only when it towers
    // over both neighboring steps. A continuous sqrt-law onset sampled on a
    // uniform grid never exceeds 1/(sqrt(2)-1) = 2.41x its successor, while
    // a genuine jump concentrates in one interval and dwarfs the smooth
    // rises on either side even when it sits inside a steep onset.
    const auto step = [&](std::size_t i) {
        return result.m[i + 1] - result.m[i];
    };
    const auto is_jump = [&](std::size_t i) {
        const double dm = step(i);
        if (!(dm > jump_threshold)) return false;
        const double before = (i == 0) ? 0.0 : step(i - 1);
        const double after = (i + 2 < n) ? step(i + 1) : 0.0;
        return dm > 2.8 * before && dm > 2.8 * after;
    };

    TransitionReport rep;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (is_jump(i)) {
            rep.s_first = 0.5 * (result.s[i] + result.s[i + 1]);
            rep.jump = result.m[i + 1] - result.m[i];
            break;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (result.m[k] > onset_eps) {
            // A departure from zero counts as second order only when it is
            // not the landing of the jump itself.
            if (k > 0 && !is_jump(k - 1)) rep.s_second = result.s[k];
            break;
        }
    }

    if (rep.s_first && rep.s_second)
        rep.kind = TransitionKind::first_and_second;
    else if (rep.s_first)
        rep.kind = TransitionKind::first_order;
    else if (rep.s_second)
        rep.kind = TransitionKind::second_order;
    else
        rep.kind = TransitionKind::none;
    return rep;
}

const char* to_string(TransitionKind kind) {
    switch (kind) {
        case TransitionKind::none: return "none";
        case TransitionKind::first_order: return "first_order";
        case TransitionKind::second_order: return "second_order";
        case TransitionKind::first_and_second: return "first_and_second";
    }
    return "unknown";
}

std::vector<SecondOrderPoint> second_order_curve(
    const ModelParams& params, const std::vector<double>& theta_grid) {
    validate(params);
    if (!(params.C > 0.0))
        throw std::domain_error("second_order_curve: requires C > 0");
    if (params.chi != 0.0)
        throw std::domain_error("second_order_curve: requires chi = 0");

    std::vector<SecondOrderPoint> out;
    out.reserve(theta_grid.size());
    for (const double th : theta_grid) {
        if (!(th > 0.0 && th < kPi))
            throw std::domain_error(
                "second_order_curve: theta must lie strictly inside (0, pi)");
        const double sh = std::sin(0.5 * th);
        const double ch = std::cos(0.5 * th);
        const double st = std::sin(th);
        const double A = 4.0 * params.C * sh * sh * sh / ch;
        const double B =
            2.0 * (params.C * sh * sh * st - A * std::cos(th)) / st;
        out.push_back({th, A, B});
    }
    return out;
}

PhaseDiagramAB phase_diagram_ab(const ModelParams& params,
                                const std::vector<double>& a_grid,
                                const std::vector<double>& b_grid,
                                const MinimizeOptions& opt) {
    if (params.chi != 0.0)
        throw std::domain_error("phase_diagram_ab: requires chi = 0");
    const PotentialTables tables(params, opt);
    PhaseDiagramAB out;
    out.a_grid = a_grid;
    out.b_grid = b_grid;
    out.cells.resize(a_grid.size() * b_grid.size());
    parallel_for(out.cells.size(), [&](std::size_t idx) {
        const double A = a_grid[idx / b_grid.size()];
        const double B = b_grid[idx % b_grid.size()];
        out.cells[idx] = minimize_with_tables(tables, A, B);
    });
    return out;
}

std::vector<PhaseScPoint> phase_diagram_sc(
    const Schedule& sched, int p, const std::vector<double>& c_grid,
    double s_resolution, double s_min, double s_max, double jump_threshold,
    double onset_eps, const MinimizeOptions& opt) {
    validate(sched);
    if (!(s_resolution > 0.0 && s_resolution <= 1e-2))
        throw std::invalid_argument(
            "phase_diagram_sc: s_resolution must lie in (0, 1e-2]");
    if (!(s_min >= 0.0 && s_max <= 1.0 && s_min < s_max))
        throw std::domain_error("phase_diagram_sc: bad s window");

    const int npts =
        static_cast<int>(std::round((s_max - s_min) / s_resolution)) + 1;
    const std::vector<double> s_grid = linspace(s_min, s_max, npts);

    std::vector<PhaseScPoint> out(c_grid.size());
    parallel_for(c_grid.size(), [&](std::size_t i) {
        ModelParams params{p, c_grid[i], 0.0, 0.0};
        const SweepResult sw = sweep(sched, params, s_grid, opt);
        const TransitionReport rep =
            classify_transitions(sw, jump_threshold, onset_eps);
        out[i] = {c_grid[i], rep.s_first, rep.jump};
    });
    return out;
}

}  // namespace bqa
