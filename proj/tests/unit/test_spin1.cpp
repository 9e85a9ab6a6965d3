#include <cmath>
#include <complex>

#include "core/spin1.hpp"
#include "doctest.h"

using namespace bqa;
using cplx = std::complex<double>;

namespace {

const Schedule kSched{3.0, 0.1, 40.0};

Mat3c mul(const Mat3c& a, const Mat3c& b) {
    Mat3c r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

Mat3c commutator(const Mat3c& a, const Mat3c& b) {
    const Mat3c ab = mul(a, b), ba = mul(b, a);
    Mat3c r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = ab[i][j] - ba[i][j];
    return r;
}

double max_abs_diff(const Mat3c& a, const Mat3c& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

Mat3c scale_i(const Mat3c& a) {
    Mat3c r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = cplx(0.0, 1.0) * a[i][j];
    return r;
}

}  // namespace

TEST_CASE("spin-1 operator structure") {
    const Spin1Ops& ops = spin1_ops();

    // sz diagonal (+1, 0, -1), exactly
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(ops.sz[i][j] == cplx(1.0 - i, 0.0));
            else
                CHECK(ops.sz[i][j] == cplx(0.0, 0.0));
        }

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // sx real symmetric, sy purely imaginary antisymmetric
            CHECK(ops.sx[i][j].imag() == 0.0);
            CHECK(ops.sx[i][j] == ops.sx[j][i]);
            CHECK(ops.sy[i][j].real() == 0.0);
            CHECK(ops.sy[i][j] == -ops.sy[j][i]);
            // hermiticity
            CHECK(ops.sx[i][j] == std::conj(ops.sx[j][i]));
            CHECK(ops.sy[i][j] == std::conj(ops.sy[j][i]));
        }
}

TEST_CASE("commutators are cyclic") {
    const Spin1Ops& ops = spin1_ops();
    CHECK(max_abs_diff(commutator(ops.sx, ops.sy), scale_i(ops.sz)) <= 1e-15);
    CHECK(max_abs_diff(commutator(ops.sy, ops.sz), scale_i(ops.sx)) <= 1e-15);
    CHECK(max_abs_diff(commutator(ops.sz, ops.sx), scale_i(ops.sy)) <= 1e-15);
}

TEST_CASE("sx^2 - sy^2 is the spin flip") {
    const Spin1Ops& ops = spin1_ops();
    const Mat3c diff = commutator(ops.sx, ops.sx);  // zero, reuse storage shape
    (void)diff;
    const Mat3c sx2 = mul(ops.sx, ops.sx), sy2 = mul(ops.sy, ops.sy);
    const Mat3d flip = spin1_flip();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(sx2[i][j] - sy2[i][j] - flip[i][j]) <= 1e-15);
}

TEST_CASE("single-spin bifurcation limits") {
    // initial state is |0>
    const auto init = single_spin_ground_state(kSched, 0.0, 0.0);
    CHECK(init.probs[1] > 0.99);

    // h = +1 ends in |+1>, h = -1 ends in |-1>
    CHECK(single_spin_ground_state(kSched, 1.0, 1.0).probs[0] > 0.99);
    CHECK(single_spin_ground_state(kSched, -1.0, 1.0).probs[2] > 0.99);

    // h = 0 ends in the even superposition of |+1> and |-1>
    const auto fin = single_spin_ground_state(kSched, 0.0, 1.0);
    CHECK(fin.probs[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(fin.probs[2] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("probability normalization and swap symmetry along the schedule") {
    for (int k = 0; k <= 100; ++k) {
        const double s = k / 100.0;
        const auto gs = single_spin_ground_state(kSched, 0.0, s);
        CHECK(std::abs(gs.probs[0] + gs.probs[1] + gs.probs[2] - 1.0) <=
              1e-12);
        // +1 <-> -1 swap symmetry of the h = 0 Hamiltonian
        CHECK(std::abs(gs.probs[0] - gs.probs[2]) <= 1e-10);
    }
}

TEST_CASE("eigenpair residual of the 3x3 solver") {
    const double c = 0.70710678118654752440;
    for (int k = 0; k <= 50; ++k) {
        const double s = k / 50.0;
        for (const double h : {0.0, 1.0, -1.0, 0.37}) {
            const auto ab = schedule_eval(kSched, s);
            const Mat3d m = {{{-ab.B - h, -ab.A * c, 0.0},
                              {-ab.A * c, 0.0, -ab.A * c},
                              {0.0, -ab.A * c, -ab.B + h}}};
            double eval;
            std::array<double, 3> v;
            sym3_smallest_eigenpair(m, eval, v);
            double res = 0.0;
            for (int i = 0; i < 3; ++i) {
                double hv = 0.0;
                for (int j = 0; j < 3; ++j) hv += m[i][j] * v[j];
                res += (hv - eval * v[i]) * (hv - eval * v[i]);
            }
            CHECK(std::sqrt(res) <= 1e-10);
        }
    }
}
