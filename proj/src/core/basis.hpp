#ifndef BQA_CORE_BASIS_HPP
#define BQA_CORE_BASIS_HPP

#include <cstddef>
#include <vector>

namespace bqa {

// Occupation triple of the permutation-symmetric number state
// |n1, n0, nm1> with n1 + n0 + nm1 = N (counts of |+1>, |0>, |-1>).
struct BasisState {
    int n1;
    int n0;
    int nm1;
};

// All occupation triples for N spins, ordered lexicographically in (n1, n0).
// Dimension (N+1)(N+2)/2; the index map is closed-form.
class SymmetricBasis {
  public:
    explicit SymmetricBasis(int N);

    int N() const { return n_; }
    std::size_t dim() const { return states_.size(); }
    const BasisState& state(std::size_t i) const { return states_[i]; }
    const std::vector<BasisState>& states() const { return states_; }

    // Position of (n1, n0, N - n1 - n0); valid occupations only.
    std::size_t index(int n1, int n0) const {
        return static_cast<std::size_t>(n1) * (n_ + 1) -
               static_cast<std::size_t>(n1) * (n1 - 1) / 2 + n0;
    }

  private:
    int n_;
    std::vector<BasisState> states_;
};

SymmetricBasis enumerate_basis(int N);

}  // namespace bqa

#endif
