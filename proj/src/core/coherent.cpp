#include "coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "hamiltonian.hpp"

namespace bqa {

std::vector<double> coherent_amplitudes(const SymmetricBasis& basis,
                                        double theta, double phi) {
    const double a1 = std::sin(0.5 * theta) * std::cos(0.5 * phi);
    const double a0 = std::cos(0.5 * theta);
    const double am = std::sin(0.5 * theta) * std::sin(0.5 * phi);
    const double lgN = std::lgamma(basis.N() + 1.0);

    std::vector<double> amp(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const BasisState st = basis.state(i);
        // zero factor with nonzero occupation kills the term outright
        if ((a1 == 0.0 && st.n1 > 0) || (a0 == 0.0 && st.n0 > 0) ||
            (am == 0.0 && st.nm1 > 0)) {
            amp[i] = 0.0;
            continue;
        }
        double lg = 0.5 * (lgN - std::lgamma(st.n1 + 1.0) -
                           std::lgamma(st.n0 + 1.0) -
                           std::lgamma(st.nm1 + 1.0));
        double sign = 1.0;
        if (st.n1 > 0) {
            lg += st.n1 * std::log(std::abs(a1));
            if (a1 < 0.0 && (st.n1 & 1)) sign = -sign;
        }
        if (st.n0 > 0) {
            lg += st.n0 * std::log(std::abs(a0));
            if (a0 < 0.0 && (st.n0 & 1)) sign = -sign;
        }
        if (st.nm1 > 0) {
            lg += st.nm1 * std::log(std::abs(am));
            if (am < 0.0 && (st.nm1 & 1)) sign = -sign;
        }
        amp[i] = sign * std::exp(lg);
    }
    return amp;
}

double coherent_overlap(const SymmetricBasis& basis,
                        const std::vector<double>& coeffs, double theta,
                        double phi) {
    if (coeffs.size() != basis.dim())
        throw std::invalid_argument("coherent_overlap: size mismatch");
    const std::vector<double> amp = coherent_amplitudes(basis, theta, phi);
    double acc = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) acc += coeffs[i] * amp[i];
    return acc;
}

double coherent_overlap(const SymmetricBasis& basis,
                        const std::vector<double>& coeffs, const Angles& a) {
    if (a.alpha != 0.0 || a.beta != 0.0)
        throw std::domain_error(
            "coherent_overlap: real form requires alpha = beta = 0");
    return coherent_overlap(basis, coeffs, a.theta, a.phi);
}

namespace {

TraceDistanceResult trace_point(const SymmetricBasis& basis,
                                const PotentialTables& tables,
                                const Schedule& sched,
                                const ModelParams& params, double s) {
    const ScheduleValue ab = schedule_eval(sched, s);
    const MinimizeResult mr = minimize_with_tables(tables, ab.A, ab.B);
    const SymmetricHamiltonian h =
        build_hamiltonian_ab(basis, ab.A, ab.B, params);
    const GroundState gs = ground_state(h);
    const double ov =
        coherent_overlap(basis, gs.coeffs, mr.angles.theta, mr.angles.phi);
    const double d = std::sqrt(std::max(0.0, 1.0 - ov * ov));
    return {d, ov, gs.energy, mr.v_min, mr.angles};
}

}  // namespace

TraceDistanceResult trace_norm_distance(const Schedule& sched,
                                        const ModelParams& params, double s,
                                        int N, const MinimizeOptions& opt) {
    if (params.chi != 0.0)
        throw std::domain_error("trace_norm_distance: requires chi = 0");
    if (N < 1) throw std::invalid_argument("trace_norm_distance: N < 1");
    const SymmetricBasis basis(N);
    const PotentialTables tables(params, opt);
    return trace_point(basis, tables, sched, params, s);
}

std::vector<TraceDistanceResult> trace_distance_scan(
    const Schedule& sched, const ModelParams& params,
    const std::vector<double>& s_grid, int N, const MinimizeOptions& opt) {
    if (params.chi != 0.0)
        throw std::domain_error("trace_distance_scan: requires chi = 0");
    if (N < 1) throw std::invalid_argument("trace_distance_scan: N < 1");
    const SymmetricBasis basis(N);
    const PotentialTables tables(params, opt);
    std::vector<TraceDistanceResult> out(s_grid.size());
    for (std::size_t i = 0; i < s_grid.size(); ++i)
        out[i] = trace_point(basis, tables, sched, params, s_grid[i]);
    return out;
}

}  // namespace bqa
