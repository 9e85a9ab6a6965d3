#include "hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "potential.hpp"

namespace bqa {

void SymmetricHamiltonian::matvec(const double* x, double* y) const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            acc += vals_[k] * x[cols_[k]];
        y[i] = acc;
    }
}

double SymmetricHamiltonian::expectation(const std::vector<double>& v) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            acc += v[i] * vals_[k] * v[cols_[k]];
    }
    return acc;
}

double SymmetricHamiltonian::frobenius_norm() const {
    double acc = 0.0;
    for (const double v : vals_) acc += v * v;
    return std::sqrt(acc);
}

std::vector<double> SymmetricHamiltonian::to_dense() const {
    const std::size_t n = dim();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            a[static_cast<std::size_t>(cols_[k]) * n + i] = vals_[k];
    return a;
}

SymmetricHamiltonian build_hamiltonian_ab(const SymmetricBasis& basis,
                                          double A, double B,
                                          const ModelParams& params) {
    validate(params);
    if (params.chi != 0.0)
        throw std::invalid_argument(
            "build_hamiltonian: symmetric-subspace elements require chi = 0");

    const int N = basis.N();
    const double CoN = params.C / N;
    SymmetricHamiltonian h;
    h.row_ptr_.reserve(basis.dim() + 1);
    h.cols_.reserve(basis.dim() * 7);
    h.vals_.reserve(basis.dim() * 7);
    h.row_ptr_.push_back(0);

    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const BasisState st = basis.state(i);
        const int n1 = st.n1, n0 = st.n0, nm1 = st.nm1;
        auto push = [&](std::size_t col, double val) {
            h.cols_.push_back(static_cast<std::int32_t>(col));
            h.vals_.push_back(val);
        };

        push(i, -B * (N - n0) + CoN * (2.0 * n1 * nm1 + n1 + nm1) -
                    N * ipow(static_cast<double>(n1 - nm1) / N, params.p));
        if (nm1 >= 1)
            push(basis.index(n1, n0 + 1),
                 -A * std::sqrt(0.5 * (n0 + 1.0) * nm1));
        if (n0 >= 1)
            push(basis.index(n1, n0 - 1),
                 -A * std::sqrt(0.5 * static_cast<double>(n0) * (nm1 + 1.0)));
        if (n0 >= 1)
            push(basis.index(n1 + 1, n0 - 1),
                 -A * std::sqrt(0.5 * (n1 + 1.0) * n0));
        if (n1 >= 1)
            push(basis.index(n1 - 1, n0 + 1),
                 -A * std::sqrt(0.5 * static_cast<double>(n1) * (n0 + 1.0)));
        if (nm1 >= 2)
            push(basis.index(n1 + 2, n0),
                 CoN * std::sqrt((n1 + 2.0) * (n1 + 1.0) * nm1 * (nm1 - 1.0)));
        if (n1 >= 2)
            push(basis.index(n1 - 2, n0),
                 CoN * std::sqrt(static_cast<double>(n1) * (n1 - 1.0) *
                                 (nm1 + 2.0) * (nm1 + 1.0)));
        h.row_ptr_.push_back(static_cast<std::int64_t>(h.cols_.size()));
    }
    return h;
}

SymmetricHamiltonian build_hamiltonian(const SymmetricBasis& basis,
                                       const Schedule& sched,
                                       const ModelParams& params, double s) {
    const ScheduleValue ab = schedule_eval(sched, s);
    return build_hamiltonian_ab(basis, ab.A, ab.B, params);
}

}  // namespace bqa
