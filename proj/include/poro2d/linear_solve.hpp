#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "poro2d/common.hpp"

namespace poro2d {

template <std::size_t N>
using CMatrix = std::array<std::array<cplx, N>, N>;

template <std::size_t N>
using CVector = std::array<cplx, N>;

template <std::size_t N>
struct SolveResult {
  CVector<N> x{};
  /// max |pivot| / min |pivot| after row equilibration; a cheap lower bound
  /// on the condition number.
  double condition_estimate = 1.0;
};

/// Gaussian elimination with row equilibration and partial pivoting for a
/// small dense complex system. Throws SingularMatrixError when a pivot
/// vanishes to working precision.
template <std::size_t N>
SolveResult<N> solve_dense(CMatrix<N> A, CVector<N> b) {
  for (std::size_t i = 0; i < N; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s = std::max(s, std::abs(A[i][j]));
    if (!(s > 0.0) || !std::isfinite(s)) throw SingularMatrixError("zero or non-finite row in linear system");
    for (std::size_t j = 0; j < N; ++j) A[i][j] /= s;
    b[i] /= s;
  }

  double pmax = 0.0;
  double pmin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    double best = std::abs(A[k][k]);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double v = std::abs(A[i][k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= 16.0 * std::numeric_limits<double>::epsilon())
      throw SingularMatrixError("singular linear system");
    if (piv != k) {
      std::swap(A[piv], A[k]);
      std::swap(b[piv], b[k]);
    }
    pmax = std::max(pmax, best);
    pmin = std::min(pmin, best);
    for (std::size_t i = k + 1; i < N; ++i) {
      const cplx f = A[i][k] / A[k][k];
      if (f == cplx{}) continue;
      for (std::size_t j = k + 1; j < N; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }

  SolveResult<N> out;
  for (std::size_t ii = N; ii-- > 0;) {
    cplx s = b[ii];
    for (std::size_t j = ii + 1; j < N; ++j) s -= A[ii][j] * out.x[j];
    out.x[ii] = s / A[ii][ii];
  }
  out.condition_estimate = pmax / pmin;
  return out;
}

template <std::size_t N>
CVector<N> multiply(const CMatrix<N>& A, const CVector<N>& x) {
  CVector<N> y{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) y[i] += A[i][j] * x[j];
  return y;
}

template <std::size_t N>
double norm2(const CVector<N>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

/// Frobenius norm.
template <std::size_t N>
double norm2(const CMatrix<N>& A) {
  double s = 0.0;
  for (const auto& row : A)
    for (const auto& c : row) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace poro2d
