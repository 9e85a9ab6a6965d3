#ifndef BQA_CORE_POTENTIAL_HPP
#define BQA_CORE_POTENTIAL_HPP

#include "model.hpp"
#include "schedule.hpp"

namespace bqa {

// Variational coordinates of the product spin-1 coherent state
//   cos(theta/2)|0> + sin(theta/2)cos(phi/2)e^{i alpha}|+1>
//                   + sin(theta/2)sin(phi/2)e^{i beta}|-1>.
// The analysis is restricted to theta in [0, pi], phi in [0, pi/2] (the
// branch reaching the all-up state), alpha and beta in [-pi, pi].
struct Angles {
    double theta = 0.0;
    double phi = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Throws std::domain_error when a coordinate leaves the restricted domain.
void validate(const Angles& a);

// Magnetization of the coherent state: sin^2(theta/2) cos(phi).
double order_parameter(const Angles& a);

// Integer power by repeated multiplication.
double ipow(double x, int n);

// Semiclassical energy per spin at raw driver/detuning coefficients (A, B):
//   -(A/sqrt2) sin(th) [cos(phi/2)cos(al+chi/2) + sin(phi/2)cos(be-chi/2)]
//   - B sin^2(th/2) + C (sin^2(th/2) sin(phi) cos(al-be))^2
//   - (sin^2(th/2) cos(phi))^p.
// No domain checks; hot path for the minimizers.
double potential_ab(double A, double B, const ModelParams& params,
                    const Angles& a) noexcept;

// Schedule-coupled, domain-checked evaluation.
double potential(const Schedule& sched, const ModelParams& params, double s,
                 const Angles& a);

struct PotentialGrad {
    double theta;
    double phi;
    double alpha;
    double beta;
};

// Closed-form partial derivatives of potential_ab.
PotentialGrad potential_grad_ab(double A, double B, const ModelParams& params,
                                const Angles& a) noexcept;

}  // namespace bqa

#endif
