#pragma once

#include <cmath>
#include <complex>

#include "poro2d/common.hpp"

namespace poro2d {

/// Square root with positive real part and its branch cut on the negative
/// real axis. Exactly-real negative arguments (either sign of zero in the
/// imaginary part) map to i * sqrt(-z), the limit from the upper half plane.
inline cplx sqrt_branch(cplx z) {
  if (z.imag() == 0.0) {
    if (z.real() < 0.0) return {0.0, std::sqrt(-z.real())};
    return {std::sqrt(z.real()), 0.0};
  }
  return std::sqrt(z);
}

/// Which value to take for kappa when q sits exactly on a branch cut.
///
/// The cuts of kappa(V, .) lie on the imaginary q axis beyond +-i/V.
/// `principal` follows sqrt_branch (upper-half-plane limit of 1/V^2 + q^2);
/// `right` takes the limit from Re q > 0, which is the side the Cagniard
/// head-wave segment is evaluated on.
enum class CutSide { principal, right };

/// Vertical slowness kappa(V, q) = (1/V^2 + q^2)^(1/2).
inline cplx kappa(double V, cplx q, CutSide side = CutSide::principal) {
  const cplx z = 1.0 / (V * V) + q * q;
  if (side == CutSide::right && q.real() == 0.0 && z.real() < 0.0) {
    // Im(q^2) = 2 Re(q) Im(q) has the sign of Im(q) for Re(q) -> 0+.
    const double s = std::sqrt(-z.real());
    return {0.0, q.imag() >= 0.0 ? s : -s};
  }
  return sqrt_branch(z);
}

}  // namespace poro2d
