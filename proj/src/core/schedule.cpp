#include "schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bqa {

void validate(const Schedule& sched) {
    if (!(sched.A0 > 0.0))
        throw std::invalid_argument("Schedule: A0 must be > 0");
    if (!(sched.sigma2 > 0.0))
        throw std::invalid_argument("Schedule: sigma2 must be > 0");
    if (!(sched.B0 > 0.0))
        throw std::invalid_argument("Schedule: B0 must be > 0");
}

ScheduleValue schedule_eval(const Schedule& sched, double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::domain_error("schedule_eval: s = " + std::to_string(s) +
                                " outside [0, 1]");
    const double u = 2.0 * s - 1.0;
    return {sched.A0 * std::exp(-(u * u) / (2.0 * sched.sigma2)), sched.B0 * u};
}

}  // namespace bqa
