#include "basis.hpp"

#include <stdexcept>

namespace bqa {

SymmetricBasis::SymmetricBasis(int N) : n_(N) {
    if (N < 1)
        throw std::invalid_argument("SymmetricBasis: N must be >= 1");
    states_.reserve(static_cast<std::size_t>(N + 1) * (N + 2) / 2);
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n0 = 0; n0 <= N - n1; ++n0)
            states_.push_back({n1, n0, N - n1 - n0});
}

SymmetricBasis enumerate_basis(int N) { return SymmetricBasis(N); }

}  // namespace bqa
