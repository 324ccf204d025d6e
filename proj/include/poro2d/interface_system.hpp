#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "poro2d/complex_kernel.hpp"
#include "poro2d/linear_solve.hpp"
#include "poro2d/material.hpp"

namespace poro2d {

/// Which top-layer P wave hits the interface.
enum class Incidence { Pf, Ps };

/// Index of each unknown in the interface system. Reflected waves live in
/// the top layer, transmitted waves in the bottom one.
enum class Outgoing : std::size_t { R_Pf = 0, R_Ps, R_S, T_Pf, T_Ps, T_S };

/// The six reflection/transmission coefficients for one incidence at one q.
struct CoeffSet {
  std::array<cplx, 6> values{};
  double condition_estimate = 1.0;
  /// Set when the condition estimate exceeds 1e12. The values are still
  /// returned; callers decide what to do with them.
  bool ill_conditioned = false;

  cplx operator[](Outgoing o) const { return values[static_cast<std::size_t>(o)]; }
  cplx R_toPf() const { return (*this)[Outgoing::R_Pf]; }
  cplx R_toPs() const { return (*this)[Outgoing::R_Ps]; }
  cplx R_toS() const { return (*this)[Outgoing::R_S]; }
  cplx T_toPf() const { return (*this)[Outgoing::T_Pf]; }
  cplx T_toPs() const { return (*this)[Outgoing::T_Ps]; }
  cplx T_toS() const { return (*this)[Outgoing::T_S]; }
};

inline constexpr double kIllConditioned = 1e12;

using InterfaceMatrix = CMatrix<6>;
using InterfaceVector = CVector<6>;

namespace detail {

// Normal-stress coupling (lambda + m beta^2) P_1j + m beta P_2j for column j.
inline double normal_stress_coupling(const LayerDerived& d, int j) {
  return (d.lambda + d.m * d.beta * d.beta) * d.P[0][j] + d.m * d.beta * d.P[1][j];
}

// Pressure coupling m (beta P_1j + P_2j) for column j.
inline double pressure_coupling(const LayerDerived& d, int j) {
  return d.m * (d.beta * d.P[0][j] + d.P[1][j]);
}

}  // namespace detail

/// Interface matrix A(q). Rows: continuity of u_x, u_y, w_y, pressure,
/// shear traction, normal traction. Columns: reflected Pf, Ps, S in the top
/// layer, then transmitted Pf, Ps, S in the bottom layer.
inline InterfaceMatrix assemble_A(cplx q, const LayerDerived& top, const LayerDerived& bot,
                                  CutSide side = CutSide::principal) {
  const cplx iq = I * q;
  const cplx q2 = q * q;
  const cplx kPf_t = kappa(top.V_Pf, q, side), kPs_t = kappa(top.V_Ps, q, side), kS_t = kappa(top.V_S, q, side);
  const cplx kPf_b = kappa(bot.V_Pf, q, side), kPs_b = kappa(bot.V_Ps, q, side), kS_b = kappa(bot.V_S, q, side);
  const auto& Pt = top.P;
  const auto& Pb = bot.P;
  const double mu_t = top.mu(), mu_b = bot.mu();
  const double vpf_t2 = top.V_Pf * top.V_Pf, vps_t2 = top.V_Ps * top.V_Ps;
  const double vpf_b2 = bot.V_Pf * bot.V_Pf, vps_b2 = bot.V_Ps * bot.V_Ps;
  const double ratio_t = top.rho_f() / top.rho_w, ratio_b = bot.rho_f() / bot.rho_w;

  InterfaceMatrix A{};
  A[0] = {-iq * Pt[0][0], -iq * Pt[0][1], -kS_t, iq * Pb[0][0], iq * Pb[0][1], -kS_b};
  A[1] = {-kPf_t * Pt[0][0], -kPs_t * Pt[0][1], iq, -kPf_b * Pb[0][0], -kPs_b * Pb[0][1], -iq};
  A[2] = {-kPf_t * Pt[1][0], -kPs_t * Pt[1][1], -iq * ratio_t,
          -kPf_b * Pb[1][0], -kPs_b * Pb[1][1], iq * ratio_b};
  A[3] = {detail::pressure_coupling(top, 0) / vpf_t2, detail::pressure_coupling(top, 1) / vps_t2, 0.0,
          -detail::pressure_coupling(bot, 0) / vpf_b2, -detail::pressure_coupling(bot, 1) / vps_b2, 0.0};
  A[4] = {2.0 * iq * mu_t * kPf_t * Pt[0][0],
          2.0 * iq * mu_t * kPs_t * Pt[0][1],
          mu_t * (kS_t * kS_t + q2),
          2.0 * iq * mu_b * kPf_b * Pb[0][0],
          2.0 * iq * mu_b * kPs_b * Pb[0][1],
          -mu_b * (kS_b * kS_b + q2)};
  A[5] = {detail::normal_stress_coupling(top, 0) / vpf_t2 + 2.0 * mu_t * kPf_t * kPf_t * Pt[0][0],
          detail::normal_stress_coupling(top, 1) / vps_t2 + 2.0 * mu_t * kPs_t * kPs_t * Pt[0][1],
          -2.0 * iq * mu_t * kS_t,
          -detail::normal_stress_coupling(bot, 0) / vpf_b2 - 2.0 * mu_b * kPf_b * kPf_b * Pb[0][0],
          // Same sign pattern as the Pf column; the traction is linear in
          // each bottom potential.
          -detail::normal_stress_coupling(bot, 1) / vps_b2 - 2.0 * mu_b * kPs_b * kPs_b * Pb[0][1],
          -2.0 * iq * mu_b * kS_b};
  return A;
}

/// Right-hand side for an incident P wave of the given kind.
inline InterfaceVector assemble_rhs(cplx q, Incidence inc, const LayerDerived& top,
                                    CutSide side = CutSide::principal) {
  const int j = inc == Incidence::Pf ? 0 : 1;
  const double V = j == 0 ? top.V_Pf : top.V_Ps;
  const double V2 = V * V;
  const cplx k = kappa(V, q, side);
  if (std::abs(k) < 1e-14) {
    std::ostringstream os;
    os << "incident vertical slowness vanishes at q = " << q << " (branch point)";
    throw DomainError(os.str());
  }
  const cplx iq = I * q;
  const double P1 = top.P[0][j], P2 = top.P[1][j];
  const cplx scale = 1.0 / (2.0 * k * V2);
  InterfaceVector b{iq * P1,
                    -k * P1,
                    -k * P2,
                    cplx(-detail::pressure_coupling(top, j) / V2),
                    2.0 * iq * top.mu() * k * P1,
                    -detail::normal_stress_coupling(top, j) / V2 - 2.0 * top.mu() * P1 * k * k};
  for (auto& v : b) v *= scale;
  return b;
}

/// Solves A(q) c = rhs for the six coefficients.
inline CoeffSet solve_coeffs(cplx q, Incidence inc, const LayerDerived& top, const LayerDerived& bot,
                             CutSide side = CutSide::principal) {
  const InterfaceMatrix A = assemble_A(q, top, bot, side);
  const InterfaceVector b = assemble_rhs(q, inc, top, side);
  try {
    const auto sol = solve_dense<6>(A, b);
    CoeffSet out;
    out.values = sol.x;
    out.condition_estimate = sol.condition_estimate;
    out.ill_conditioned = sol.condition_estimate > kIllConditioned;
    return out;
  } catch (const SingularMatrixError&) {
    std::ostringstream os;
    os << "interface matrix is singular at q = " << q;
    throw SingularMatrixError(os.str());
  }
}

/// Relative residual ||A c - rhs|| / (||A|| ||c|| + ||rhs||).
inline double relative_residual(const InterfaceMatrix& A, const CoeffSet& c, const InterfaceVector& rhs) {
  InterfaceVector r = multiply<6>(A, c.values);
  for (std::size_t i = 0; i < 6; ++i) r[i] -= rhs[i];
  return norm2<6>(r) / (norm2<6>(A) * norm2<6>(c.values) + norm2<6>(rhs));
}

}  // namespace poro2d
