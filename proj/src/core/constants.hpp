#ifndef BQA_CORE_CONSTANTS_HPP
#define BQA_CORE_CONSTANTS_HPP

namespace bqa {

// Correctly rounded 1/sqrt(2); shared by the spin-1 ladder amplitude, the
// semiclassical driver term, and the symmetric-subspace driver elements so
// that the single-site assemblies agree bit for bit.
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace bqa

#endif
