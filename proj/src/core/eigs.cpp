#include "eigs.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace bqa {

namespace {

void normalize(std::vector<double>& v) {
    double nrm = 0.0;
    for (const double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;
}

// Deterministic global sign: largest-magnitude coefficient positive.
void fix_sign(std::vector<double>& v) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;
}

double residual_norm(const SymmetricHamiltonian& h,
                     const std::vector<double>& v, double lambda) {
    std::vector<double> hv(v.size());
    h.matvec(v.data(), hv.data());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = hv[i] - lambda * v[i];
        acc += r * r;
    }
    return std::sqrt(acc);
}

GroundState finish(const SymmetricHamiltonian& h, std::vector<double> v,
                   double lambda, const char* method) {
    normalize(v);
    fix_sign(v);
    const double res = residual_norm(h, v, lambda);
    const double tol = 1e-8 * h.frobenius_norm();
    if (!(res <= tol))
        throw ConvergenceError(std::string(method) +
                                   ": eigenpair residual " +
                                   std::to_string(res) + " exceeds " +
                                   std::to_string(tol),
                               res);
    return {std::move(v), lambda, res};
}

}  // namespace

double smallest_eigenpair_dense(std::vector<double>& a, int n,
                                std::vector<double>& evec) {
    evec.assign(n, 0.0);
    std::vector<double> w(n);
    std::vector<lapack_int> isuppz(2);
    lapack_int m = 0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info = LAPACKE_dsyevr(
        LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, 1,
        abstol, &m, w.data(), evec.data(), n, isuppz.data());
    if (info != 0 || m < 1)
        throw ConvergenceError(
            "dsyevr failed with info " + std::to_string(info), -1.0);
    return w[0];
}

GroundState ground_state_dense(const SymmetricHamiltonian& h) {
    const int n = static_cast<int>(h.dim());
    std::vector<double> a = h.to_dense();
    std::vector<double> v;
    const double lambda = smallest_eigenpair_dense(a, n, v);
    return finish(h, std::move(v), lambda, "dense eigensolver");
}

GroundState ground_state_lanczos(const SymmetricHamiltonian& h, int max_iter) {
    const std::size_t n = h.dim();
    const int kmax = std::min<int>(max_iter, static_cast<int>(n));
    const double hnorm = h.frobenius_norm();
    const double tol = 1e-8 * hnorm;

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 1e-3 * std::sin(static_cast<double>(i) + 1.0);
    normalize(v);

    double est_residual = hnorm;
    std::vector<double> ritz;
    double lambda = 0.0;

    for (int k = 0; k < kmax; ++k) {
        basis.push_back(v);
        h.matvec(v.data(), w.data());
        if (k > 0) {
            const std::vector<double>& prev = basis[k - 1];
            for (std::size_t i = 0; i < n; ++i) w[i] -= beta[k - 1] * prev[i];
        }
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) a += v[i] * w[i];
        alpha.push_back(a);
        for (std::size_t i = 0; i < n; ++i) w[i] -= a * v[i];
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : basis) {
                double d = 0.0;
                for (std::size_t i = 0; i < n; ++i) d += u[i] * w[i];
                for (std::size_t i = 0; i < n; ++i) w[i] -= d * u[i];
            }
        }
        double b = 0.0;
        for (const double x : w) b += x * x;
        b = std::sqrt(b);

        const int m = k + 1;
        const bool breakdown = b < 1e-14 * std::max(1.0, hnorm);
        if (breakdown || m == kmax || (m >= 10 && m % 5 == 0)) {
            std::vector<double> d = alpha;
            std::vector<double> e = beta;
            e.resize(m, 0.0);
            std::vector<double> z(static_cast<std::size_t>(m) * m);
            const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m,
                                                  d.data(), e.data(), z.data(),
                                                  m);
            if (info != 0)
                throw ConvergenceError(
                    "dstev failed with info " + std::to_string(info), -1.0);
            lambda = d[0];
            est_residual = std::abs(b * z[m - 1]);  // last component, col 0
            if (est_residual <= 0.25 * tol || breakdown || m == kmax) {
                ritz.assign(n, 0.0);
                for (int j = 0; j < m; ++j) {
                    const double y = z[j];
                    const std::vector<double>& u = basis[j];
                    for (std::size_t i = 0; i < n; ++i) ritz[i] += y * u[i];
                }
                if (est_residual <= 0.25 * tol || breakdown) break;
            }
        }
        if (b == 0.0) break;
        beta.push_back(b);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
    }

    if (ritz.empty())
        throw ConvergenceError("lanczos: no Ritz vector formed", est_residual);
    return finish(h, std::move(ritz), lambda, "lanczos");
}

GroundState ground_state(const SymmetricHamiltonian& h) {
    return h.dim() <= 2500 ? ground_state_dense(h) : ground_state_lanczos(h);
}

}  // namespace bqa
