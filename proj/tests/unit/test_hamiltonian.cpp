#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/hamiltonian.hpp"
#include "core/potential.hpp"
#include "core/spin1.hpp"
#include "doctest.h"

using namespace bqa;

namespace {

const Schedule kSched{3.0, 0.1, 40.0};

// Single-site assembly of the full Hamiltonian at N = 1:
// -A sx - B sz^2 + C (sx^2 - sy^2)^2 - sz^p in the (|+1>, |0>, |-1>) basis.
Mat3d single_site(double A, double B, double C, int p) {
    const double c = 0.70710678118654752440;
    Mat3d m{};
    m[0][1] = m[1][0] = m[1][2] = m[2][1] = -A * c;
    // (sx^2 - sy^2)^2 = diag(1, 0, 1)
    m[0][0] = -B + C - 1.0;
    m[1][1] = 0.0;
    m[2][2] = -B + C - ((p % 2 == 0) ? 1.0 : -1.0);
    return m;
}

}  // namespace

TEST_CASE("N = 1 reproduces the single-site assembly exactly") {
    const SymmetricBasis basis(1);
    for (const double s : {0.0, 0.3, 0.55, 1.0}) {
        for (const double C : {0.0, 1.4, -0.9}) {
            for (const int p : {2, 3, 5, 6}) {
                const ModelParams params{p, C, 0.0, 0.0};
                const auto h = build_hamiltonian(basis, kSched, params, s);
                const auto dense = h.to_dense();
                const auto ab = schedule_eval(kSched, s);
                const Mat3d site = single_site(ab.A, ab.B, C, p);
                // basis order here is (|-1>, |0>, |+1>): reversed indices
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        CHECK(dense[static_cast<std::size_t>(j) * 3 + i] ==
                              site[2 - i][2 - j]);
            }
        }
    }
}

TEST_CASE("diagonal at the all-up state") {
    const int N = 7;
    const SymmetricBasis basis(N);
    const ModelParams params{5, 1.4, 0.0, 0.0};
    const auto h = build_hamiltonian(basis, kSched, params, 0.8);
    const auto ab = schedule_eval(kSched, 0.8);
    const std::size_t idx = basis.index(N, 0);
    const auto dense = h.to_dense();
    CHECK(dense[idx * basis.dim() + idx] ==
          doctest::Approx(-ab.B * N + params.C - N).epsilon(1e-14));
}

TEST_CASE("matrix is exactly symmetric") {
    const SymmetricBasis basis(12);
    const ModelParams params{5, 1.4, 0.0, 0.0};
    const auto h = build_hamiltonian(basis, kSched, params, 0.47);
    const auto dense = h.to_dense();
    const std::size_t n = basis.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            CHECK(dense[i * n + j] == dense[j * n + i]);
}

TEST_CASE("sign structure of the off-diagonal elements") {
    const SymmetricBasis basis(10);
    for (const double C : {2.0, -0.9}) {
        const ModelParams params{5, C, 0.0, 0.0};
        const auto h = build_hamiltonian(basis, kSched, params, 0.5);
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            const BasisState row = basis.state(i);
            for (auto k = h.row_ptr()[i]; k < h.row_ptr()[i + 1]; ++k) {
                const std::size_t j = h.cols()[k];
                if (j == i) continue;
                const BasisState col = basis.state(j);
                const int dn1 = row.n1 - col.n1;
                if (dn1 == 2 || dn1 == -2) {
                    // catalyst pair hop carries the sign of C
                    if (C > 0) CHECK(h.vals()[k] > 0.0);
                    if (C < 0) CHECK(h.vals()[k] < 0.0);
                } else {
                    // driver bond, non-positive while A(s) > 0
                    CHECK(h.vals()[k] <= 0.0);
                }
            }
        }
    }
}

TEST_CASE("dimension and band structure across sizes") {
    for (const int N : {1, 2, 5, 17, 33, 60}) {
        const SymmetricBasis basis(N);
        const ModelParams params{4, 0.7, 0.0, 0.0};
        const auto h = build_hamiltonian(basis, kSched, params, 0.5);
        CHECK(h.dim() == basis.dim());
        for (std::size_t i = 0; i < h.dim(); ++i) {
            const auto nnz = h.row_ptr()[i + 1] - h.row_ptr()[i];
            CHECK(nnz >= 1);
            CHECK(nnz <= 7);
        }
    }
}

TEST_CASE("matvec agrees with the dense image") {
    const SymmetricBasis basis(9);
    const ModelParams params{3, 1.1, 0.0, 0.0};
    const auto h = build_hamiltonian(basis, kSched, params, 0.62);
    const auto dense = h.to_dense();
    const std::size_t n = h.dim();
    std::vector<double> x(n), y(n), yd(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(0.7 * i + 0.2);
    h.matvec(x.data(), y.data());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) yd[i] += dense[j * n + i] * x[j];
    for (std::size_t i = 0; i < n; ++i)
        CHECK(y[i] == doctest::Approx(yd[i]).epsilon(1e-13));
}

TEST_CASE("rotated driver is rejected") {
    const SymmetricBasis basis(3);
    const ModelParams params{5, 1.0, 0.4, 0.0};
    CHECK_THROWS_AS(build_hamiltonian(basis, kSched, params, 0.5),
                    std::invalid_argument);
}
