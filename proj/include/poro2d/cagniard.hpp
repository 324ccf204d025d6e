#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "poro2d/complex_kernel.hpp"

namespace poro2d {

/// A two-leg ray: leg a runs from the interface to the receiver, leg b from
/// the source to the interface. Incident waves use a single leg (depth_b = 0
/// is allowed). The Cagniard function of the path is
///
///   F(q, t) = depth_a kappa(velocity_a, q) + depth_b kappa(velocity_b, q) + i q x - t.
struct PathSpec {
  double depth_a = 0.0;
  double velocity_a = 1.0;
  double depth_b = 0.0;
  double velocity_b = 1.0;
  double x = 0.0;
  double v_max = 1.0;  ///< fastest velocity anywhere in the model
};

enum class Regime { head, body };

/// One point q(t) of a Cagniard contour.
struct ContourSample {
  double t = 0.0;
  cplx q{};
  cplx dqdt{};
  Regime regime = Regime::body;
};

inline void validate(const PathSpec& p) {
  if (!(p.depth_a >= 0) || !(p.depth_b >= 0) || !std::isfinite(p.depth_a) || !std::isfinite(p.depth_b))
    throw DomainError("path depths must be finite and >= 0");
  if (!(p.velocity_a > 0) || !(p.velocity_b > 0)) throw DomainError("path velocities must be > 0");
  if (!(p.v_max >= p.velocity_a) || !(p.v_max >= p.velocity_b))
    throw DomainError("v_max must bound both leg velocities");
  if (!std::isfinite(p.x)) throw DomainError("offset must be finite");
}

inline bool same_leg(const PathSpec& p) { return p.velocity_a == p.velocity_b; }

inline cplx contour_function(const PathSpec& p, cplx q, double t) {
  return p.depth_a * kappa(p.velocity_a, q) + p.depth_b * kappa(p.velocity_b, q) + I * q * p.x - t;
}

/// dF/dq.
inline cplx contour_slope(const PathSpec& p, cplx q) {
  cplx s = I * p.x;
  if (p.depth_a != 0.0) s += p.depth_a * q / kappa(p.velocity_a, q);
  if (p.depth_b != 0.0) s += p.depth_b * q / kappa(p.velocity_b, q);
  return s;
}

/// dq/dt along F(q(t), t) = 0, i.e. 1 / F_q. Throws at the saddle, where
/// |F_q| drops below 1e-9 of the path length scale |x| + depth_a + depth_b.
inline cplx dqdt(const PathSpec& p, cplx q) {
  const cplx s = contour_slope(p, q);
  if (std::abs(s) < 1e-9 * (std::abs(p.x) + p.depth_a + p.depth_b)) {
    std::ostringstream os;
    os << "dq/dt undefined at the saddle point q = " << q;
    throw DomainError(os.str());
  }
  return 1.0 / s;
}

namespace detail {

// Travel time through an interface crossing at horizontal distance xi from
// the receiver, and its derivative in xi. X = |x|.
inline double leg_time(const PathSpec& p, double xi) {
  const double X = std::abs(p.x);
  return std::hypot(xi, p.depth_a) / p.velocity_a + std::hypot(X - xi, p.depth_b) / p.velocity_b;
}

inline double leg_time_derivative(const PathSpec& p, double xi) {
  const double X = std::abs(p.x);
  const double ra = std::hypot(xi, p.depth_a);
  const double rb = std::hypot(X - xi, p.depth_b);
  const double da = ra > 0 ? xi / (p.velocity_a * ra) : 0.0;
  const double db = rb > 0 ? (X - xi) / (p.velocity_b * rb) : 0.0;
  return da - db;
}

// Crossing point minimizing travel time (Fermat). Derivative-sign bisection.
inline double fermat_crossing(const PathSpec& p) {
  const double X = std::abs(p.x);
  if (X == 0.0) return 0.0;
  double lo = 0.0, hi = X;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * X; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (leg_time_derivative(p, mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// tau(s) = F(-i sgn(x) s, 0) on the imaginary axis, real while s < 1/V_a, 1/V_b.
inline double axis_time(const PathSpec& p, double s) {
  auto leg = [s](double d, double V) { return d == 0.0 ? 0.0 : d * std::sqrt(std::max(0.0, 1.0 / (V * V) - s * s)); };
  return leg(p.depth_a, p.velocity_a) + leg(p.depth_b, p.velocity_b) + std::abs(p.x) * s;
}

inline double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace detail

/// |Im q| at the saddle of the contour, i.e. the ray parameter of the
/// geometric ray. The saddle itself is q0 = -i sgn(x) saddle_slowness.
inline double saddle_slowness(const PathSpec& p) {
  validate(p);
  if (p.x == 0.0) return 0.0;
  if (same_leg(p)) {
    const double D = p.depth_a + p.depth_b;
    return std::abs(p.x) / (std::hypot(p.x, D) * p.velocity_a);
  }
  const double xi = detail::fermat_crossing(p);
  const double X = std::abs(p.x);
  if (p.depth_a > 0.0 || xi > 0.0) return xi / (p.velocity_a * std::hypot(xi, p.depth_a));
  return (X - xi) / (p.velocity_b * std::hypot(X - xi, p.depth_b));
}

inline cplx saddle_point(const PathSpec& p) { return {0.0, -detail::sgn(p.x) * saddle_slowness(p)}; }

/// Arrival time t0 of the body wave along the path.
inline double arrival_body(const PathSpec& p) {
  validate(p);
  if (same_leg(p)) return std::hypot(p.x, p.depth_a + p.depth_b) / p.velocity_a;
  return detail::leg_time(p, detail::fermat_crossing(p));
}

/// Whether the contour crosses a branch cut of the fastest mode before
/// reaching its saddle, so that a head wave precedes the body wave.
inline bool head_exists(const PathSpec& p) {
  validate(p);
  if (p.x == 0.0) return false;
  if (same_leg(p)) {
    const double r = std::hypot(p.x, p.depth_a + p.depth_b);
    return std::abs(p.x) / r > p.velocity_a / p.v_max;
  }
  return saddle_slowness(p) > 1.0 / p.v_max;
}

/// Head-wave formula value, whether or not the gate is open. Never exceeds
/// arrival_body(p).
inline double head_time_formula(const PathSpec& p) {
  const double s = 1.0 / p.v_max;
  auto leg = [s](double d, double V) { return d * std::sqrt(std::max(0.0, 1.0 / (V * V) - s * s)); };
  return leg(p.depth_a, p.velocity_a) + leg(p.depth_b, p.velocity_b) + std::abs(p.x) / p.v_max;
}

/// Head-wave arrival time t_h, or nullopt when the phase has no head wave.
inline std::optional<double> arrival_head(const PathSpec& p) {
  if (!head_exists(p)) return std::nullopt;
  return head_time_formula(p);
}

/// Closed-form contour of a path whose two legs share one velocity V and
/// total depth D. For t <= t0 returns the imaginary-axis branch v(t) (the
/// caller guarantees t > t_h); for t > t0 the body branch gamma(t). At
/// t == t0 exactly dq/dt is infinite and is reported as NaN.
inline ContourSample contour_same_leg(double t, double x, double D, double V) {
  const double r = std::hypot(x, D);
  const double t0 = r / V;
  const double r2 = r * r;
  ContourSample s;
  s.t = t;
  if (t > t0) {
    const double w = std::sqrt((t - t0) * (t + t0)) / r;  // sqrt(t^2/r^2 - 1/V^2)
    s.regime = Regime::body;
    s.q = cplx(D / r * w, -x * t / r2);
    s.dqdt = cplx(D / r * (t / r2) / w, -x / r2);
    return s;
  }
  s.regime = Regime::head;
  const double u = std::sqrt((t0 - t) * (t0 + t)) / r;  // sqrt(1/V^2 - t^2/r^2)
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x < 0.0) {
    s.q = cplx(0.0, -(D / r * u + x * t / r2));
    s.dqdt = u > 0 ? cplx(0.0, D * t / (r * r2 * u) - x / r2) : cplx(nan, nan);
  } else {
    s.q = cplx(0.0, D / r * u - x * t / r2);
    s.dqdt = u > 0 ? cplx(0.0, -(D * t / (r * r2 * u) + x / r2)) : cplx(nan, nan);
  }
  return s;
}

namespace detail {

inline double residual_tolerance(double t) { return 1e-11 * std::max(1.0, t); }

// Damped Newton on F(., t) restricted to Re q >= 0. Returns nullopt on failure.
inline std::optional<cplx> newton_body(const PathSpec& p, double t, cplx q, int max_iter = 100) {
  if (q.real() < 0.0) q = -std::conj(q);
  double f = std::abs(contour_function(p, q, t));
  const double target = 1e-14 * std::max(1.0, t);
  for (int it = 0; it < max_iter; ++it) {
    if (f <= target) return q;
    const cplx slope = contour_slope(p, q);
    if (slope == cplx{}) return std::nullopt;
    const cplx step = contour_function(p, q, t) / slope;
    double lam = 1.0;
    bool moved = false;
    for (int k = 0; k < 40; ++k, lam *= 0.5) {
      cplx qn = q - lam * step;
      if (qn.real() < 0.0) qn = -std::conj(qn);  // F(-conj q) = conj F(q)
      const double fn = std::abs(contour_function(p, qn, t));
      if (fn < f) {
        const bool stalled = std::abs(qn - q) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(q);
        q = qn;
        f = fn;
        moved = true;
        if (stalled) return f <= residual_tolerance(t) ? std::optional<cplx>(q) : std::nullopt;
        break;
      }
    }
    if (!moved) return f <= residual_tolerance(t) ? std::optional<cplx>(q) : std::nullopt;
  }
  return f <= residual_tolerance(t) ? std::optional<cplx>(q) : std::nullopt;
}

// Root of axis_time(s) = t on [lo, hi] where axis_time is monotone.
inline double bisect_axis(const PathSpec& p, double t, double lo, double hi, bool increasing) {
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = axis_time(p, mid) < t;
    if (below == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Cagniard contour of a general two-leg path, followed by numerical root
/// finding.
///
/// Body branch (t > t0): the root of F(., t) with Re q > 0. Newton is seeded
/// from `seed` when given, otherwise the contour is marched out from the
/// saddle point. Head branch (t_h < t <= t0): q = -i sgn(x) s with s real;
/// of the two roots on the imaginary axis the one with Im(x dq/dt) <= 0 is
/// kept.
inline ContourSample contour_implicit(const PathSpec& p, double t, std::optional<cplx> seed = std::nullopt) {
  validate(p);
  const double t0 = arrival_body(p);
  const double ps = saddle_slowness(p);
  const double sg = detail::sgn(p.x);
  ContourSample out;
  out.t = t;

  if (t <= t0) {
    if (!head_exists(p)) {
      std::ostringstream os;
      os << "no head-wave branch for this path at t = " << t << " (t0 = " << t0 << ")";
      throw DomainError(os.str());
    }
    out.regime = Regime::head;
    if (t == t0) {
      out.q = cplx(0.0, -sg * ps);
      const double nan = std::numeric_limits<double>::quiet_NaN();
      out.dqdt = cplx(nan, nan);
      return out;
    }
    const double s_cap = std::min(p.depth_a > 0 ? 1.0 / p.velocity_a : INFINITY,
                                  p.depth_b > 0 ? 1.0 / p.velocity_b : INFINITY);
    std::optional<ContourSample> chosen;
    auto consider = [&](double s) {
      ContourSample c = out;
      c.q = cplx(0.0, -sg * s);
      const cplx slope = contour_slope(p, c.q);
      if (std::abs(slope) < 1e-300) return;
      c.dqdt = 1.0 / slope;
      if (p.x * c.dqdt.imag() <= 0.0 && !chosen) chosen = c;
    };
    if (detail::axis_time(p, 0.0) <= t) consider(detail::bisect_axis(p, t, 0.0, ps, true));
    if (std::isfinite(s_cap) && detail::axis_time(p, s_cap) <= t)
      consider(detail::bisect_axis(p, t, ps, s_cap, false));
    if (!chosen) {
      std::ostringstream os;
      os << "no imaginary-axis root satisfies the orientation rule at t = " << t;
      throw ConvergenceError(os.str());
    }
    return *chosen;
  }

  out.regime = Regime::body;
  const cplx q0 = cplx(0.0, -sg * ps);
  auto curvature = [&]() {
    // F_qq at the saddle: sum d / (V^2 kappa^3), real and positive.
    double c = 0.0;
    for (auto [d, V] : {std::pair{p.depth_a, p.velocity_a}, std::pair{p.depth_b, p.velocity_b}}) {
      if (d == 0.0) continue;
      const double k = std::sqrt(1.0 / (V * V) - ps * ps);
      c += d / (V * V * k * k * k);
    }
    return c;
  };

  std::optional<cplx> q;
  if (seed) q = detail::newton_body(p, t, *seed);
  if (!q) {
    // March out from the saddle: q - q0 ~ sqrt(2 (t - t0) / F_qq).
    const double c = curvature();
    const double span = t - t0;
    double dt = std::min(span, 1e-6 * std::max(t0, 1e-300));
    cplx cur = q0 + std::sqrt(2.0 * dt / c);
    double tc = t0 + dt;
    std::optional<cplx> got = detail::newton_body(p, tc, cur);
    while (got && tc < t) {
      cur = *got;
      const double tn = std::min(t, t0 + 2.0 * (tc - t0));
      const cplx pred = cur + dqdt(p, cur) * (tn - tc);
      got = detail::newton_body(p, tn, pred);
      if (!got) got = detail::newton_body(p, tn, cur);
      tc = tn;
    }
    q = got;
  }
  if (!q) {
    std::ostringstream os;
    os << "Newton iteration on the Cagniard contour did not converge at t = " << t << " (t0 = " << t0
       << ", x = " << p.x << ", depths " << p.depth_a << ", " << p.depth_b << ")";
    throw ConvergenceError(os.str());
  }
  out.q = *q;
  out.dqdt = dqdt(p, *q);
  return out;
}

/// Follows one phase's contour through increasing times, reusing the last
/// body root as the Newton seed. Equal-velocity paths use the closed form.
class ContourTracer {
 public:
  explicit ContourTracer(const PathSpec& path)
      : path_(path), t0_(arrival_body(path)), head_(head_exists(path)), t_head_(head_time_formula(path)) {}

  const PathSpec& path() const { return path_; }
  double t0() const { return t0_; }
  bool has_head() const { return head_; }
  std::optional<double> t_head() const { return head_ ? std::optional<double>(t_head_) : std::nullopt; }
  /// Earliest time at which the phase is nonzero.
  double onset() const { return head_ ? t_head_ : t0_; }

  /// Contour point at t; requires t > onset().
  ContourSample at(double t) {
    if (same_leg(path_))
      return contour_same_leg(t, path_.x, path_.depth_a + path_.depth_b, path_.velocity_a);
    if (t <= t0_) return contour_implicit(path_, t);
    std::optional<cplx> seed;
    if (last_ && t >= last_->t) seed = last_->q + last_->dqdt * (t - last_->t);
    ContourSample s = contour_implicit(path_, t, seed);
    last_ = s;
    return s;
  }

 private:
  PathSpec path_;
  double t0_;
  bool head_;
  double t_head_;
  std::optional<ContourSample> last_;
};

}  // namespace poro2d
