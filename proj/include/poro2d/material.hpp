#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "poro2d/common.hpp"

namespace poro2d {

/// The eight measured Biot inputs of one homogeneous layer (SI units).
struct PoroelasticMaterial {
  double rho_s = 0.0;  ///< solid density, kg/m^3
  double rho_f = 0.0;  ///< fluid density, kg/m^3
  double phi = 0.0;    ///< porosity, 0 < phi < 1
  double a = 1.0;      ///< tortuosity, >= 1
  double K_s = 0.0;    ///< solid bulk modulus, Pa
  double K_f = 0.0;    ///< fluid bulk modulus, Pa
  double K_b = 0.0;    ///< frame bulk modulus, Pa
  double mu = 0.0;     ///< frame shear modulus, Pa

  friend bool operator==(const PoroelasticMaterial&, const PoroelasticMaterial&) = default;
};

/// Row-major 2x2 real matrix, m[row][col].
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Everything downstream needs to know about one layer.
///
/// P holds the fast (column 0) and slow (column 1) eigenvectors of A^-1 B,
/// each normalized to unit Euclidean norm with its first nonzero entry
/// positive.
struct LayerDerived {
  PoroelasticMaterial material;
  double rho = 0.0;
  double rho_w = 0.0;
  double m = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  Mat2 A{};
  Mat2 B{};
  Mat2 P{};
  double V_Pf = 0.0;
  double V_Ps = 0.0;
  double V_S = 0.0;

  double rho_f() const { return material.rho_f; }
  double mu() const { return material.mu; }
};

/// Throws DomainError naming the first violated invariant.
inline void validate(const PoroelasticMaterial& mat) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid poroelastic material: ") + what);
  };
  require(std::isfinite(mat.rho_s) && mat.rho_s > 0, "rho_s must be > 0");
  require(std::isfinite(mat.rho_f) && mat.rho_f > 0, "rho_f must be > 0");
  require(std::isfinite(mat.phi) && mat.phi > 0 && mat.phi < 1, "phi must lie in (0, 1)");
  require(std::isfinite(mat.a) && mat.a >= 1, "tortuosity a must be >= 1");
  require(std::isfinite(mat.K_s) && mat.K_s > 0, "K_s must be > 0");
  require(std::isfinite(mat.K_f) && mat.K_f > 0, "K_f must be > 0");
  require(std::isfinite(mat.K_b) && mat.K_b > 0, "K_b must be > 0");
  require(std::isfinite(mat.mu) && mat.mu > 0, "mu must be > 0");
  require(mat.K_b < mat.K_s, "K_b must be < K_s (Biot coefficient in (0, 1))");
}

/// Fills rho, rho_w, m, beta, lambda and alpha. A, B, P and the velocities
/// are left zero.
///
/// lambda may be negative (it is a Lame constant, not a modulus); the Biot
/// modulus m and the P-wave modulus alpha must be positive.
inline LayerDerived derive_scalars(const PoroelasticMaterial& mat) {
  validate(mat);
  LayerDerived d;
  d.material = mat;
  d.rho = mat.phi * mat.rho_f + (1.0 - mat.phi) * mat.rho_s;
  d.rho_w = mat.a * mat.rho_f / mat.phi;
  d.beta = 1.0 - mat.K_b / mat.K_s;
  if (!(d.beta > 0)) throw DomainError("Biot coefficient beta must be > 0");
  const double inv_m = mat.phi / mat.K_f + (d.beta - mat.phi) / mat.K_s;
  if (!(inv_m > 0)) throw DomainError("Biot modulus m must be > 0");
  d.m = 1.0 / inv_m;
  d.lambda = mat.K_b - 2.0 * mat.mu / 3.0;
  d.alpha = d.lambda + 2.0 * mat.mu + d.m * d.beta * d.beta;
  if (!(d.alpha > 0)) throw DomainError("P-wave modulus lambda + 2 mu + m beta^2 must be > 0");
  return d;
}

/// Mass matrix A and stiffness matrix B of the coupled (solid, relative
/// fluid) potentials.
inline std::pair<Mat2, Mat2> assemble_matrices(const LayerDerived& d) {
  const double rf = d.rho_f();
  Mat2 A{{{d.rho, rf}, {rf, d.rho_w}}};
  const double mb = d.m * d.beta;
  Mat2 B{{{d.lambda + 2.0 * d.mu() + d.m * d.beta * d.beta, mb}, {mb, d.m}}};
  return {A, B};
}

struct EigenSplit {
  Mat2 P{};
  double V_Pf = 0.0;
  double V_Ps = 0.0;
};

namespace detail {

inline std::array<double, 2> unit_eigenvector(const Mat2& M, double lam) {
  // Two candidate null vectors of (M - lam I); keep the better conditioned.
  std::array<double, 2> u{M[0][1], lam - M[0][0]};
  std::array<double, 2> w{lam - M[1][1], M[1][0]};
  auto n2 = [](const std::array<double, 2>& v) { return v[0] * v[0] + v[1] * v[1]; };
  std::array<double, 2> v = n2(u) >= n2(w) ? u : w;
  double n = std::sqrt(n2(v));
  if (n == 0.0) {
    // M is already diagonal in this direction.
    v = std::abs(M[0][0] - lam) <= std::abs(M[1][1] - lam) ? std::array<double, 2>{1.0, 0.0}
                                                          : std::array<double, 2>{0.0, 1.0};
    n = 1.0;
  }
  v[0] /= n;
  v[1] /= n;
  if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) {
    v[0] = -v[0];
    v[1] = -v[1];
  }
  return v;
}

}  // namespace detail

/// Diagonalizes A^-1 B = P diag(V_Pf^2, V_Ps^2) P^-1 through the closed-form
/// characteristic polynomial.
inline EigenSplit eigendecompose(const Mat2& A, const Mat2& B) {
  const double detA = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  if (!(detA > 0) || !(A[0][0] > 0)) throw DomainError("mass matrix A must be positive definite");
  const double detB = B[0][0] * B[1][1] - B[0][1] * B[1][0];
  if (!(detB > 0) || !(B[0][0] > 0)) throw DomainError("stiffness matrix B must be positive definite");

  Mat2 M{};
  const Mat2 Ainv{{{A[1][1] / detA, -A[0][1] / detA}, {-A[1][0] / detA, A[0][0] / detA}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M[i][j] = Ainv[i][0] * B[0][j] + Ainv[i][1] * B[1][j];

  const double half_tr = 0.5 * (M[0][0] + M[1][1]);
  const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  // (lam1 - lam2)^2 / 4 written without cancellation.
  const double half_diff = 0.5 * (M[0][0] - M[1][1]);
  const double disc = half_diff * half_diff + M[0][1] * M[1][0];
  if (!(disc >= 0)) throw DomainError("A^-1 B has complex eigenvalues");
  const double lam_fast = half_tr + std::sqrt(disc);
  if (!(lam_fast > 0)) throw DomainError("A^-1 B eigenvalues must be positive");
  const double lam_slow = det / lam_fast;
  if (!(lam_slow > 0)) throw DomainError("A^-1 B eigenvalues must be positive");
  if (lam_fast - lam_slow <= 1e-9 * lam_fast)
    throw DomainError("degenerate medium: fast and slow P velocities coincide");

  const auto vf = detail::unit_eigenvector(M, lam_fast);
  const auto vs = detail::unit_eigenvector(M, lam_slow);
  EigenSplit out;
  out.P = Mat2{{{vf[0], vs[0]}, {vf[1], vs[1]}}};
  out.V_Pf = std::sqrt(lam_fast);
  out.V_Ps = std::sqrt(lam_slow);
  return out;
}

inline double shear_velocity(const LayerDerived& d) {
  const double rf = d.rho_f();
  const double den = d.rho * d.rho_w - rf * rf;
  if (!(den > 0)) throw DomainError("rho * rho_w - rho_f^2 must be > 0");
  return std::sqrt(d.mu() * d.rho_w / den);
}

/// Full per-layer derivation.
inline LayerDerived derive_layer(const PoroelasticMaterial& mat) {
  LayerDerived d = derive_scalars(mat);
  std::tie(d.A, d.B) = assemble_matrices(d);
  const EigenSplit e = eigendecompose(d.A, d.B);
  d.P = e.P;
  d.V_Pf = e.V_Pf;
  d.V_Ps = e.V_Ps;
  d.V_S = shear_velocity(d);
  return d;
}

/// The largest of the six body-wave velocities of a two-layer model.
inline double max_velocity(const LayerDerived& top, const LayerDerived& bottom) {
  return std::max({top.V_Pf, top.V_Ps, top.V_S, bottom.V_Pf, bottom.V_Ps, bottom.V_S});
}

}  // namespace poro2d
