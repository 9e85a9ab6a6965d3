#ifndef BQA_CORE_HAMILTONIAN_HPP
#define BQA_CORE_HAMILTONIAN_HPP

#include <cstdint>
#include <vector>

#include "basis.hpp"
#include "model.hpp"
#include "schedule.hpp"

namespace bqa {

// Sparse symmetric matrix over the symmetric subspace, CSR with both
// triangles stored; at most seven entries per row (diagonal, two driver
// bonds each way, catalyst pair hops each way).
class SymmetricHamiltonian {
  public:
    std::size_t dim() const { return row_ptr_.size() - 1; }
    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const { return cols_; }
    const std::vector<double>& vals() const { return vals_; }

    void matvec(const double* x, double* y) const;
    double expectation(const std::vector<double>& v) const;  // v' H v
    double frobenius_norm() const;
    std::vector<double> to_dense() const;  // column-major dim x dim

  private:
    friend SymmetricHamiltonian build_hamiltonian_ab(const SymmetricBasis&,
                                                     double, double,
                                                     const ModelParams&);
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<double> vals_;
};

// Matrix elements over |n1, n0, nm1>:
//   diagonal   -B (N - n0) + (C/N)(2 n1 nm1 + n1 + nm1) - N ((n1-nm1)/N)^p
//   driver     -A sqrt((n0+1) nm1 / 2)   on (n1, n0+1, nm1-1) <-> (n1, n0, nm1)
//              -A sqrt((n1+1) n0 / 2)    on (n1+1, n0-1, nm1) <-> (n1, n0, nm1)
//   catalyst   (C/N) sqrt((n1+2)(n1+1) nm1 (nm1-1))
//                                        on (n1+2, n0, nm1-2) <-> (n1, n0, nm1)
// Out-of-range neighbors are skipped. Requires chi = 0 (the representation
// is real).
SymmetricHamiltonian build_hamiltonian_ab(const SymmetricBasis& basis,
                                          double A, double B,
                                          const ModelParams& params);

SymmetricHamiltonian build_hamiltonian(const SymmetricBasis& basis,
                                       const Schedule& sched,
                                       const ModelParams& params, double s);

}  // namespace bqa

#endif
