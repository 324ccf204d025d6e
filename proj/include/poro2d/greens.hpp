#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string_view>

#include "poro2d/cagniard.hpp"
#include "poro2d/interface_system.hpp"
#include "poro2d/material.hpp"

namespace poro2d {

/// The fourteen wave phases making up the solid velocity field. Incident and
/// reflected phases live in the top layer, transmitted ones in the bottom.
enum class WavePhase : std::size_t {
  IncPf, IncPs,
  R_PfPf, R_PfPs, R_PfS, R_PsPf, R_PsPs, R_PsS,
  T_PfPf, T_PfPs, T_PfS, T_PsPf, T_PsPs, T_PsS,
};

inline constexpr std::size_t kPhaseCount = 14;

inline constexpr std::array<WavePhase, kPhaseCount> kAllPhases{
    WavePhase::IncPf,  WavePhase::IncPs,  WavePhase::R_PfPf, WavePhase::R_PfPs, WavePhase::R_PfS,
    WavePhase::R_PsPf, WavePhase::R_PsPs, WavePhase::R_PsS,  WavePhase::T_PfPf, WavePhase::T_PfPs,
    WavePhase::T_PfS,  WavePhase::T_PsPf, WavePhase::T_PsPs, WavePhase::T_PsS};

enum class Family { incident, reflected, transmitted };
enum class Mode { Pf, Ps, S };

struct PhaseInfo {
  Family family;
  Incidence incidence;
  Mode outgoing;  ///< equals the incident mode for incident phases
};

inline constexpr PhaseInfo phase_info(WavePhase p) {
  constexpr std::array<Mode, 3> outs{Mode::Pf, Mode::Ps, Mode::S};
  const auto i = static_cast<std::size_t>(p);
  if (i < 2) return {Family::incident, i == 0 ? Incidence::Pf : Incidence::Ps, i == 0 ? Mode::Pf : Mode::Ps};
  const std::size_t k = i - 2;
  const Family fam = k < 6 ? Family::reflected : Family::transmitted;
  const std::size_t j = k % 6;
  return {fam, j < 3 ? Incidence::Pf : Incidence::Ps, outs[j % 3]};
}

inline constexpr std::string_view phase_name(WavePhase p) {
  constexpr std::array<std::string_view, kPhaseCount> names{
      "inc_Pf", "inc_Ps", "R_PfPf", "R_PfPs", "R_PfS", "R_PsPf", "R_PsPs",
      "R_PsS",  "T_PfPf", "T_PfPs", "T_PfS",  "T_PsPf", "T_PsPs", "T_PsS"};
  return names[static_cast<std::size_t>(p)];
}

inline constexpr std::size_t index(WavePhase p) { return static_cast<std::size_t>(p); }

/// Source amplitudes (f_u, f_w, f_p) of the bulk-force and pressure terms.
struct SourceMix {
  double f_u = 0.0;
  double f_w = 0.0;
  double f_p = 0.0;
  friend bool operator==(const SourceMix&, const SourceMix&) = default;
};

/// Source projected on the fast and slow P potentials of the top layer.
struct SourceAmplitudes {
  double F_Pf = 0.0;
  double F_Ps = 0.0;
};

struct Receiver {
  double x = 0.0;
  double y = 0.0;  ///< > 0 in the top layer, < 0 in the bottom layer
  friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// F+ = (A+ P+)^-1 (f_u - beta m f_p, f_w - m f_p).
inline SourceAmplitudes project_source(const SourceMix& mix, const LayerDerived& top) {
  const double r0 = mix.f_u - top.beta * top.m * mix.f_p;
  const double r1 = mix.f_w - top.m * mix.f_p;
  Mat2 M{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M[i][j] = top.A[i][0] * top.P[0][j] + top.A[i][1] * top.P[1][j];
  const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  const double n1 = std::max(std::abs(M[0][0]) + std::abs(M[1][0]), std::abs(M[0][1]) + std::abs(M[1][1]));
  const double ninv = std::max(std::abs(M[1][1]) + std::abs(M[1][0]), std::abs(M[0][1]) + std::abs(M[0][0])) /
                      std::abs(det);
  if (!(det != 0.0) || !(n1 * ninv <= 1e12)) throw SingularMatrixError("source projection matrix A P is singular");
  return {(M[1][1] * r0 - M[0][1] * r1) / det, (M[0][0] * r1 - M[1][0] * r0) / det};
}

/// The two layers, the source depth h and the projected source.
struct Model {
  LayerDerived top;
  LayerDerived bottom;
  double source_depth = 0.0;
  SourceAmplitudes amplitudes;
  double v_max = 0.0;
};

inline Model make_model(const PoroelasticMaterial& top, const PoroelasticMaterial& bottom, double h,
                        const SourceMix& mix) {
  if (!(h > 0) || !std::isfinite(h)) throw DomainError("source depth must be > 0");
  Model m;
  m.top = derive_layer(top);
  m.bottom = derive_layer(bottom);
  m.source_depth = h;
  m.amplitudes = project_source(mix, m.top);
  m.v_max = max_velocity(m.top, m.bottom);
  return m;
}

inline double mode_velocity(const LayerDerived& d, Mode m) {
  switch (m) {
    case Mode::Pf: return d.V_Pf;
    case Mode::Ps: return d.V_Ps;
    case Mode::S: return d.V_S;
  }
  return 0.0;
}

inline double incident_velocity(const LayerDerived& top, Incidence inc) {
  return inc == Incidence::Pf ? top.V_Pf : top.V_Ps;
}

inline double incident_amplitude(const SourceAmplitudes& a, Incidence inc) {
  return inc == Incidence::Pf ? a.F_Pf : a.F_Ps;
}

/// True when the phase contributes on the receiver's side of the interface.
inline bool applicable(WavePhase p, const Receiver& rec) {
  return phase_info(p).family == Family::transmitted ? rec.y < 0.0 : rec.y > 0.0;
}

/// Ray path of a phase. The receiver leg uses |y|, so a path is defined on
/// either side; only applicable() phases enter the field.
inline PathSpec phase_path(const Model& m, WavePhase p, const Receiver& rec) {
  const PhaseInfo info = phase_info(p);
  const double h = m.source_depth;
  const double v_inc = incident_velocity(m.top, info.incidence);
  PathSpec path;
  path.x = rec.x;
  path.v_max = m.v_max;
  switch (info.family) {
    case Family::incident:
      path.depth_a = std::abs(rec.y - h);
      path.velocity_a = v_inc;
      path.depth_b = 0.0;
      path.velocity_b = v_inc;
      break;
    case Family::reflected:
      path.depth_a = std::abs(rec.y);
      path.velocity_a = mode_velocity(m.top, info.outgoing);
      path.depth_b = h;
      path.velocity_b = v_inc;
      break;
    case Family::transmitted:
      path.depth_a = std::abs(rec.y);
      path.velocity_a = mode_velocity(m.bottom, info.outgoing);
      path.depth_b = h;
      path.velocity_b = v_inc;
      break;
  }
  return path;
}

/// Velocity kernel of an incident wave at a top-layer receiver: the gradient
/// of the time-integrated line-source potential F arccosh(t/t0) / (2 pi V^2),
/// scaled by the mode's solid eigenvector entry. Exactly zero for t <= t0.
inline Vec2 incident_kernel(const Model& m, Incidence kind, const Receiver& rec, double t) {
  const int j = kind == Incidence::Pf ? 0 : 1;
  const double V = incident_velocity(m.top, kind);
  const double dy = rec.y - m.source_depth;
  const double r = std::hypot(rec.x, dy);
  const double t0 = r / V;
  if (!(t > t0)) return {};
  const double amp = m.top.P[0][j] * incident_amplitude(m.amplitudes, kind) / (V * V);
  const double c = -amp * t / (2.0 * pi * r * r * std::sqrt((t - t0) * (t + t0)));
  return {c * rec.x, c * dy};
}

/// Evaluates one phase at increasing times, carrying the contour state.
class PhaseKernel {
 public:
  PhaseKernel(const Model& model, WavePhase phase, const Receiver& rec)
      : model_(&model), phase_(phase), rec_(rec), info_(phase_info(phase)),
        applicable_(applicable(phase, rec)), tracer_(phase_path(model, phase, rec)) {}

  WavePhase phase() const { return phase_; }
  bool is_applicable() const { return applicable_; }
  const PathSpec& path() const { return tracer_.path(); }
  double t0() const { return tracer_.t0(); }
  std::optional<double> t_head() const {
    return info_.family == Family::incident ? std::nullopt : tracer_.t_head();
  }
  bool head_gate() const { return info_.family != Family::incident && tracer_.has_head(); }
  double onset() const { return head_gate() ? tracer_.onset() : t0(); }

  /// Kernel sample at t. Exactly zero before the onset, at the singular
  /// time t0, and for phases that do not reach this receiver.
  Vec2 at(double t) {
    if (!applicable_) return {};
    if (info_.family == Family::incident) return incident_kernel(*model_, info_.incidence, rec_, t);
    if (!(t > onset()) || t == t0()) return {};
    try {
      return scattered(tracer_.at(t));
    } catch (const Error& e) {
      std::ostringstream os;
      os << "phase " << phase_name(phase_) << " at receiver (" << rec_.x << ", " << rec_.y << "), t = " << t
         << ": " << e.what();
      throw ConvergenceError(os.str());
    }
  }

  /// Coefficient-weighted kernel at one contour point.
  Vec2 scattered(const ContourSample& s) const {
    const Model& m = *model_;
    const CutSide side = s.regime == Regime::head ? CutSide::right : CutSide::principal;
    const CoeffSet coeffs = solve_coeffs(s.q, info_.incidence, m.top, m.bottom, side);
    const bool refl = info_.family == Family::reflected;
    const std::size_t slot = static_cast<std::size_t>(info_.outgoing) + (refl ? 0 : 3);
    const cplx C = coeffs.values[slot];
    const double F = incident_amplitude(m.amplitudes, info_.incidence);
    const LayerDerived& layer = refl ? m.top : m.bottom;
    const cplx iq = I * s.q;
    const cplx k = kappa(mode_velocity(layer, info_.outgoing), s.q, side);
    const cplx w = C * s.dqdt;
    if (info_.outgoing == Mode::S) {
      const double a = F / pi;
      const double vx = (refl ? -a : a) * (k * w).real();
      const double vy = a * (iq * w).real();
      return {vx, vy};
    }
    const int col = info_.outgoing == Mode::Pf ? 0 : 1;
    const double a = layer.P[0][col] * F / pi;
    const double vx = -a * (iq * w).real();
    const double vy = (refl ? -a : a) * (k * w).real();
    return {vx, vy};
  }

 private:
  const Model* model_;
  WavePhase phase_;
  Receiver rec_;
  PhaseInfo info_;
  bool applicable_;
  ContourTracer tracer_;
};

/// Single-sample kernel of any reflected or transmitted phase.
inline Vec2 scattered_kernel(const Model& m, WavePhase phase, const Receiver& rec, double t) {
  return PhaseKernel(m, phase, rec).at(t);
}

/// Total solid velocity kernel at a receiver: incident and reflected phases
/// above the interface, transmitted phases below it.
inline Vec2 green_velocity(const Model& m, const Receiver& rec, double t) {
  if (rec.y == 0.0) throw DomainError("receivers on the interface are not supported");
  Vec2 sum;
  for (WavePhase p : kAllPhases) {
    if (!applicable(p, rec)) continue;
    sum += PhaseKernel(m, p, rec).at(t);
  }
  return sum;
}

}  // namespace poro2d
