#include "potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "constants.hpp"

namespace bqa {

void validate(const Angles& a) {
    constexpr double pi = std::numbers::pi;
    if (!(a.theta >= 0.0 && a.theta <= pi))
        throw std::domain_error("Angles: theta outside [0, pi]");
    if (!(a.phi >= 0.0 && a.phi <= pi / 2.0))
        throw std::domain_error("Angles: phi outside [0, pi/2]");
    if (!(a.alpha >= -pi && a.alpha <= pi))
        throw std::domain_error("Angles: alpha outside [-pi, pi]");
    if (!(a.beta >= -pi && a.beta <= pi))
        throw std::domain_error("Angles: beta outside [-pi, pi]");
}

double order_parameter(const Angles& a) {
    const double sh = std::sin(0.5 * a.theta);
    return sh * sh * std::cos(a.phi);
}

double ipow(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

double potential_ab(double A, double B, const ModelParams& params,
                    const Angles& a) noexcept {
    const double sh = std::sin(0.5 * a.theta);
    const double s2 = sh * sh;
    const double st = std::sin(a.theta);
    const double chi2 = 0.5 * params.chi;

    const double driver =
        -(A * kInvSqrt2) * st *
        (std::cos(0.5 * a.phi) * std::cos(a.alpha + chi2) +
         std::sin(0.5 * a.phi) * std::cos(a.beta - chi2));
    const double detune = -B * s2;
    const double k = s2 * std::sin(a.phi) * std::cos(a.alpha - a.beta);
    const double catalyst = params.C * k * k;
    const double problem = -ipow(s2 * std::cos(a.phi), params.p);
    return driver + detune + catalyst + problem;
}

double potential(const Schedule& sched, const ModelParams& params, double s,
                 const Angles& a) {
    validate(a);
    const ScheduleValue ab = schedule_eval(sched, s);
    return potential_ab(ab.A, ab.B, params, a);
}

PotentialGrad potential_grad_ab(double A, double B, const ModelParams& params,
                                const Angles& a) noexcept {
    const double sh = std::sin(0.5 * a.theta);
    const double s2 = sh * sh;
    const double st = std::sin(a.theta);
    const double ct = std::cos(a.theta);
    const double cp2 = std::cos(0.5 * a.phi);
    const double sp2 = std::sin(0.5 * a.phi);
    const double sp = std::sin(a.phi);
    const double cp = std::cos(a.phi);
    const double chi2 = 0.5 * params.chi;
    const double ca = std::cos(a.alpha + chi2);
    const double cb = std::cos(a.beta - chi2);
    const double cab = std::cos(a.alpha - a.beta);
    const double sab = std::sin(a.alpha - a.beta);

    const double k = s2 * sp * cab;
    const double ppow = ipow(s2 * cp, params.p - 1);
    const double drv = A * kInvSqrt2;

    PotentialGrad g;
    g.theta = -drv * ct * (cp2 * ca + sp2 * cb) - 0.5 * B * st +
              params.C * k * st * sp * cab -
              params.p * ppow * 0.5 * st * cp;
    g.phi = -0.5 * drv * st * (cp2 * cb - sp2 * ca) +
            2.0 * params.C * k * s2 * cp * cab + params.p * ppow * s2 * sp;
    g.alpha = drv * st * cp2 * std::sin(a.alpha + chi2) -
              2.0 * params.C * k * s2 * sp * sab;
    g.beta = drv * st * sp2 * std::sin(a.beta - chi2) +
             2.0 * params.C * k * s2 * sp * sab;
    return g;
}

}  // namespace bqa
