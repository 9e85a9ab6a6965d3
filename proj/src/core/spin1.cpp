#include "spin1.hpp"

#include <cmath>

#include "constants.hpp"

namespace bqa {

namespace {

Spin1Ops make_ops() {
    const double c = kInvSqrt2;
    const std::complex<double> ic(0.0, c);
    Spin1Ops ops{};
    ops.sx = {{{0.0, c, 0.0}, {c, 0.0, c}, {0.0, c, 0.0}}};
    ops.sy = {{{0.0, -ic, 0.0}, {ic, 0.0, -ic}, {0.0, ic, 0.0}}};
    ops.sz = {{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}};
    return ops;
}

}  // namespace

const Spin1Ops& spin1_ops() {
    static const Spin1Ops ops = make_ops();
    return ops;
}

Mat3d spin1_flip() {
    return {{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}};
}

namespace {

// Cyclic Jacobi in long double. Three sweeps already reach working precision
// for 3x3; we iterate until the off-diagonal mass is negligible.
void jacobi3(long double a[3][3], long double v[3][3]) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i][j] = (i == j) ? 1.0L : 0.0L;

    for (int sweep = 0; sweep < 50; ++sweep) {
        long double off = 0.0L, diag = 0.0L;
        for (int i = 0; i < 3; ++i) {
            diag += std::abs(a[i][i]);
            for (int j = i + 1; j < 3; ++j) off += std::abs(a[i][j]);
        }
        if (off <= 1e-22L * (diag + off)) break;

        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0L) continue;
                const long double theta =
                    (a[q][q] - a[p][p]) / (2.0L * a[p][q]);
                long double t =
                    1.0L / (std::abs(theta) + std::sqrt(theta * theta + 1.0L));
                if (theta < 0.0L) t = -t;
                const long double c = 1.0L / std::sqrt(t * t + 1.0L);
                const long double sgn = t * c;

                for (int k = 0; k < 3; ++k) {
                    const long double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - sgn * akq;
                    a[k][q] = sgn * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const long double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - sgn * aqk;
                    a[q][k] = sgn * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const long double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - sgn * vkq;
                    v[k][q] = sgn * vkp + c * vkq;
                }
            }
        }
    }
}

}  // namespace

void sym3_smallest_eigenpair(const Mat3d& m, double& eval,
                             std::array<double, 3>& evec) {
    long double a[3][3], v[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
    jacobi3(a, v);

    int lo = 0;
    for (int i = 1; i < 3; ++i)
        if (a[i][i] < a[lo][lo]) lo = i;

    long double norm = 0.0L;
    for (int i = 0; i < 3; ++i) norm += v[i][lo] * v[i][lo];
    norm = std::sqrt(norm);

    eval = static_cast<double>(a[lo][lo]);
    for (int i = 0; i < 3; ++i) evec[i] = static_cast<double>(v[i][lo] / norm);
}

SingleSpinGroundState single_spin_ground_state(const Schedule& sched, double h,
                                               double s) {
    const ScheduleValue ab = schedule_eval(sched, s);
    const double c = kInvSqrt2;
    // -A sx - B sz^2 - h sz in the (|+1>, |0>, |-1>) basis; real symmetric.
    const Mat3d m = {{{-ab.B - h, -ab.A * c, 0.0},
                      {-ab.A * c, 0.0, -ab.A * c},
                      {0.0, -ab.A * c, -ab.B + h}}};
    double eval;
    std::array<double, 3> vec;
    sym3_smallest_eigenpair(m, eval, vec);
    return {{vec[0] * vec[0], vec[1] * vec[1], vec[2] * vec[2]}, eval};
}

}  // namespace bqa
