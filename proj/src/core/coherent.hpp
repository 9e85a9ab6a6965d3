#ifndef BQA_CORE_COHERENT_HPP
#define BQA_CORE_COHERENT_HPP

#include <vector>

#include "basis.hpp"
#include "eigs.hpp"
#include "minimize.hpp"

namespace bqa {

// Expansion of the product coherent state (alpha = beta = 0) over the
// symmetric number basis:
//   sqrt(N!/(n1! n0! nm1!)) (sin(th/2)cos(phi/2))^n1 (cos(th/2))^n0
//                           (sin(th/2)sin(phi/2))^nm1,
// evaluated in log space. The vector has unit 2-norm for any (theta, phi).
std::vector<double> coherent_amplitudes(const SymmetricBasis& basis,
                                        double theta, double phi);

// Inner product of a symmetric-subspace state with the coherent state.
double coherent_overlap(const SymmetricBasis& basis,
                        const std::vector<double>& coeffs, double theta,
                        double phi);

// Overload taking full coordinates; requires alpha = beta = 0.
double coherent_overlap(const SymmetricBasis& basis,
                        const std::vector<double>& coeffs, const Angles& a);

struct TraceDistanceResult {
    double D;             // sqrt(1 - overlap^2)
    double overlap;       // <coherent(theta_min, phi_min) | exact ground>
    double energy_exact;  // finite-N ground energy
    double v_min_sc;      // semiclassical minimum per spin
    Angles angles_sc;
};

// Distance between the exact size-N ground state and the coherent state at
// the semiclassical minimizing angles for the same (s, params). chi must
// be 0.
TraceDistanceResult trace_norm_distance(const Schedule& sched,
                                        const ModelParams& params, double s,
                                        int N, const MinimizeOptions& opt = {});

// Batched version reusing the basis and minimizer tables across the grid.
std::vector<TraceDistanceResult> trace_distance_scan(
    const Schedule& sched, const ModelParams& params,
    const std::vector<double>& s_grid, int N, const MinimizeOptions& opt = {});

}  // namespace bqa

#endif
