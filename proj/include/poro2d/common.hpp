#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace poro2d {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// A real 2-vector (x, y). Used for velocity and displacement samples.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

// Error hierarchy. Everything thrown by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the physical domain of a formula.
struct DomainError : Error {
  using Error::Error;
};

/// A linear system that could not be solved.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// Iterative root finding failed, or no root satisfied the selection rule.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Kernel samples do not cover the convolution window.
struct GridCoverageError : Error {
  using Error::Error;
};

}  // namespace poro2d
