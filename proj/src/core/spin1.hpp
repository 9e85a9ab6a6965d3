#ifndef BQA_CORE_SPIN1_HPP
#define BQA_CORE_SPIN1_HPP

#include <array>
#include <complex>

#include "schedule.hpp"

namespace bqa {

using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;
using Mat3d = std::array<std::array<double, 3>, 3>;

// Spin-1 operator matrices in the fixed basis order (|+1>, |0>, |-1>).
// sz is diagonal with entries (+1, 0, -1); sx and sy carry the 1/sqrt(2)
// ladder amplitudes.
struct Spin1Ops {
    Mat3c sx;
    Mat3c sy;
    Mat3c sz;
};

const Spin1Ops& spin1_ops();

// (sx)^2 - (sy)^2: the antidiagonal |+1><-1| + |-1><+1| flip.
Mat3d spin1_flip();

struct SingleSpinGroundState {
    std::array<double, 3> probs;  // |<+1|gs>|^2, |<0|gs>|^2, |<-1|gs>|^2
    double energy;
};

// Instantaneous ground state of -A(s) sx - B(s) sz^2 - h sz.
// The 3x3 eigenproblem is solved by cyclic Jacobi in extended precision so
// that the near-degenerate late-schedule pair (h = 0) resolves cleanly.
SingleSpinGroundState single_spin_ground_state(const Schedule& sched, double h,
                                               double s);

// Smallest eigenpair of a symmetric 3x3 matrix (row-major); used by the
// single-spin solver and exposed for cross-checks.
void sym3_smallest_eigenpair(const Mat3d& m, double& eval,
                             std::array<double, 3>& evec);

}  // namespace bqa

#endif
