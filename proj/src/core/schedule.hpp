#ifndef BQA_CORE_SCHEDULE_HPP
#define BQA_CORE_SCHEDULE_HPP

namespace bqa {

// Annealing schedule: Gaussian driver amplitude A(s) peaking at s = 1/2 and a
// linear detuning B(s) running from -B0 to +B0 over the dimensionless time
// s in [0, 1].
struct Schedule {
    double A0 = 3.0;      // driver peak amplitude, > 0
    double sigma2 = 0.1;  // Gaussian width sigma^2, > 0
    double B0 = 40.0;     // detuning endpoint amplitude, > 0
};

struct ScheduleValue {
    double A;
    double B;
};

// Throws std::invalid_argument if any amplitude is non-positive.
void validate(const Schedule& sched);

// A(s) = A0 exp(-(2s-1)^2 / (2 sigma^2)), B(s) = B0 (2s-1).
// Throws std::domain_error if s is outside [0, 1].
ScheduleValue schedule_eval(const Schedule& sched, double s);

}  // namespace bqa

#endif
