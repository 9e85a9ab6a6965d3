#ifndef BQA_CORE_EIGS_HPP
#define BQA_CORE_EIGS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hamiltonian.hpp"

namespace bqa {

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double achieved_residual)
        : std::runtime_error(what), residual(achieved_residual) {}
    double residual;
};

struct GroundState {
    std::vector<double> coeffs;  // normalized; largest-|coefficient| positive
    double energy = 0.0;
    double residual = 0.0;  // ||H v - E v||_2
};

// Smallest eigenpair of a dense symmetric matrix (column-major, destroyed).
// Returns the eigenvalue; the eigenvector lands in evec.
double smallest_eigenpair_dense(std::vector<double>& a, int n,
                                std::vector<double>& evec);

// Ground state with residual contract ||H v - E v|| <= 1e-8 ||H||_F.
// Dense solve up to side 2500, Lanczos with full reorthogonalization above;
// throws ConvergenceError with the achieved residual on failure.
GroundState ground_state(const SymmetricHamiltonian& h);

GroundState ground_state_dense(const SymmetricHamiltonian& h);
GroundState ground_state_lanczos(const SymmetricHamiltonian& h,
                                 int max_iter = 400);

}  // namespace bqa

#endif
