#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "poro2d/greens.hpp"

namespace poro2d {

/// Outcome of comparing a module against a brute-force oracle.
struct OracleReport {
  std::string name;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  std::size_t samples = 0;
  double tolerance = 0.0;
  bool pass = false;

  void add(double abs_err, double rel_err) {
    max_abs_error = std::max(max_abs_error, abs_err);
    max_rel_error = std::max(max_rel_error, rel_err);
    ++samples;
  }
  void finish() { pass = samples > 0 && max_rel_error <= tolerance; }

  std::string str() const {
    std::ostringstream os;
    os << name << ": " << (pass ? "PASS" : "FAIL") << " samples=" << samples << " max_abs=" << max_abs_error
       << " max_rel=" << max_rel_error << " tol=" << tolerance;
    return os.str();
  }
};

/// Two-leg travel time minimised by brute force: a dense scan of the
/// interface crossing followed by golden-section polishing.
inline double fermat_oracle(const PathSpec& p, std::size_t scan_points = 1'000'000) {
  const double X = std::abs(p.x);
  auto T = [&](double xi) {
    return std::sqrt(xi * xi + p.depth_a * p.depth_a) / p.velocity_a +
           std::sqrt((X - xi) * (X - xi) + p.depth_b * p.depth_b) / p.velocity_b;
  };
  if (X == 0.0) return T(0.0);
  std::size_t best = 0;
  double tbest = T(0.0);
  for (std::size_t k = 1; k <= scan_points; ++k) {
    const double v = T(X * static_cast<double>(k) / static_cast<double>(scan_points));
    if (v < tbest) {
      tbest = v;
      best = k;
    }
  }
  const double h = X / static_cast<double>(scan_points);
  double a = std::max(0.0, (static_cast<double>(best) - 1.0) * h);
  double b = std::min(X, (static_cast<double>(best) + 1.0) * h);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = T(c), fd = T(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, X); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = T(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = T(d);
    }
  }
  return std::min({tbest, fc, fd, T(0.5 * (a + b))});
}

/// Velocity kernel of a line source of strength F_amp in a homogeneous
/// medium, taken from the closed-form time-integrated potential
///   Psi = F_amp / (2 pi V^2) arccosh(V t / r)
/// by centred finite differences in space (step 1e-3 r), times the solid
/// eigenvector entry p11.
inline Vec2 green2d_oracle(double V, double F_amp, double p11, const Receiver& rec, double h, double t) {
  auto psi = [&](double x, double y) {
    const double r = std::sqrt(x * x + (y - h) * (y - h));
    const double z = V * t / r;
    if (!(z > 1.0)) return 0.0;
    return F_amp / (2.0 * pi * V * V) * std::log(z + std::sqrt(z * z - 1.0));
  };
  const double r = std::sqrt(rec.x * rec.x + (rec.y - h) * (rec.y - h));
  if (!(V * t > r)) return {};
  const double d = 1e-3 * r;
  const double gx = (psi(rec.x + d, rec.y) - psi(rec.x - d, rec.y)) / (2.0 * d);
  const double gy = (psi(rec.x, rec.y + d) - psi(rec.x, rec.y - d)) / (2.0 * d);
  return {p11 * gx, p11 * gy};
}

struct HomogeneousGeometry {
  double source_depth = 500.0;
  Receiver receiver{400.0, -533.0};
  SourceMix mix{-1e10, -1e10, 0.0};
  std::size_t q_samples = 200;
  std::size_t t_samples = 200;
  double t_end = 1.0;
};

struct HomogeneousReport {
  OracleReport reflection;    ///< max |R| over sampled slownesses
  OracleReport continuation;  ///< transmitted sum vs incident continued below
  bool pass() const { return reflection.pass && continuation.pass; }
};

/// One material on both sides of the interface: reflections must vanish and
/// the transmitted field must continue the incident one.
inline HomogeneousReport homogeneous_check(const PoroelasticMaterial& mat, const HomogeneousGeometry& g = {},
                                           double reflection_tol = 1e-8, double continuation_tol = 1e-6) {
  HomogeneousReport rep;
  rep.reflection.name = "homogeneous reflection";
  rep.reflection.tolerance = reflection_tol;
  rep.continuation.name = "homogeneous continuation";
  rep.continuation.tolerance = continuation_tol;

  const Model m = make_model(mat, mat, g.source_depth, g.mix);
  const double s_max = 2.0 / std::min({m.top.V_Ps, m.top.V_S});
  for (std::size_t k = 0; k < g.q_samples; ++k) {
    // Alternate real, imaginary-axis and off-axis slownesses.
    const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(g.q_samples);
    cplx q;
    switch (k % 3) {
      case 0: q = {u * s_max, 0.0}; break;
      case 1: q = {0.0, u * s_max}; break;
      default: q = {0.3 * u * s_max, -u * s_max}; break;
    }
    for (Incidence inc : {Incidence::Pf, Incidence::Ps}) {
      const CoeffSet c = solve_coeffs(q, inc, m.top, m.bottom);
      double r = 0.0;
      for (std::size_t j = 0; j < 3; ++j) r = std::max(r, std::abs(c.values[j]));
      rep.reflection.add(r, r);
    }
  }
  rep.reflection.finish();

  const Receiver below = g.receiver;
  const double r = std::hypot(below.x, below.y - g.source_depth);
  const double t_first = r / m.top.V_Pf;
  const double t_slow = r / m.top.V_Ps;
  double ref_max = 0.0;
  std::vector<std::pair<Vec2, Vec2>> pairs;
  for (std::size_t k = 0; k < g.t_samples; ++k) {
    const double t = t_first + (g.t_end - t_first) * (static_cast<double>(k) + 0.5) / static_cast<double>(g.t_samples);
    if (std::abs(t - t_slow) < 1e-9 * t_slow) continue;
    Vec2 trans;
    for (WavePhase p : kAllPhases)
      if (phase_info(p).family == Family::transmitted) trans += scattered_kernel(m, p, below, t);
    const Vec2 inc = incident_kernel(m, Incidence::Pf, below, t) + incident_kernel(m, Incidence::Ps, below, t);
    ref_max = std::max(ref_max, norm(inc));
    pairs.emplace_back(trans, inc);
  }
  for (const auto& [a, b] : pairs) {
    const double e = norm(a - b);
    rep.continuation.add(e, ref_max > 0 ? e / ref_max : e);
  }
  rep.continuation.finish();
  return rep;
}

}  // namespace poro2d
