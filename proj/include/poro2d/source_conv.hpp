#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poro2d/greens.hpp"

namespace poro2d {

enum class WaveletKind {
  gauss5,     ///< the fifth-derivative-of-Gaussian formula with a = pi^2 / f0^2
  gauss5_si,  ///< same polynomial with a = pi^2 f0^2 (dimensionally consistent)
  delta,      ///< Dirac impulse; its primitive is the unit step
  custom,     ///< user samples, linearly interpolated
};

struct SourceWavelet {
  WaveletKind kind = WaveletKind::gauss5;
  double f0 = 15.0;
  /// (t, f(t)) pairs for WaveletKind::custom, strictly increasing in t.
  std::vector<std::pair<double, double>> samples;
};

namespace detail {

inline double gauss5_rate(const SourceWavelet& w) {
  return w.kind == WaveletKind::gauss5 ? pi * pi / (w.f0 * w.f0) : pi * pi * w.f0 * w.f0;
}

inline void check_custom(const SourceWavelet& w) {
  if (w.samples.size() < 2) throw DomainError("custom wavelet needs at least two samples");
  for (std::size_t i = 1; i < w.samples.size(); ++i)
    if (!(w.samples[i].first > w.samples[i - 1].first))
      throw DomainError("custom wavelet sample times must be strictly increasing");
}

}  // namespace detail

/// f(t). Zero for the delta kind, which the convolution handles through its
/// primitive.
inline double wavelet_eval(const SourceWavelet& w, double t) {
  switch (w.kind) {
    case WaveletKind::gauss5:
    case WaveletKind::gauss5_si: {
      const double a = detail::gauss5_rate(w);
      const double s = t - 1.0 / w.f0;
      const double s2 = s * s;
      return 4.0 * a * (9.0 * s + 4.0 * a * s * s2 - 4.0 * a * a * s2 * s2 * s) * std::exp(-a * s2);
    }
    case WaveletKind::delta:
      return 0.0;
    case WaveletKind::custom: {
      detail::check_custom(w);
      const auto& v = w.samples;
      if (t <= v.front().first || t >= v.back().first) return t == v.front().first ? v.front().second : (t == v.back().first ? v.back().second : 0.0);
      auto it = std::upper_bound(v.begin(), v.end(), t, [](double a, const auto& p) { return a < p.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double lam = (t - lo.first) / (hi.first - lo.first);
      return lo.second + lam * (hi.second - lo.second);
    }
  }
  return 0.0;
}

/// Antiderivative of f vanishing at t -> -infinity.
///
/// For the Gaussian kinds, with s = t - 1/f0,
///   f = 4a (9 s + 4a s^3 - 4a^2 s^5) e^{-a s^2}
/// integrates to (8 a^2 s^4 + 8 a s^2 - 10) e^{-a s^2}.
inline double wavelet_primitive(const SourceWavelet& w, double t) {
  switch (w.kind) {
    case WaveletKind::gauss5:
    case WaveletKind::gauss5_si: {
      const double a = detail::gauss5_rate(w);
      const double s = t - 1.0 / w.f0;
      const double as2 = a * s * s;
      return (8.0 * as2 * as2 + 8.0 * as2 - 10.0) * std::exp(-as2);
    }
    case WaveletKind::delta:
      return t >= 0.0 ? 1.0 : 0.0;
    case WaveletKind::custom: {
      detail::check_custom(w);
      const auto& v = w.samples;
      if (t <= v.front().first) return 0.0;
      double acc = 0.0;
      for (std::size_t i = 1; i < v.size(); ++i) {
        const auto& lo = v[i - 1];
        const auto& hi = v[i];
        if (t >= hi.first) {
          acc += 0.5 * (lo.second + hi.second) * (hi.first - lo.first);
          continue;
        }
        const double d = t - lo.first;
        const double ft = lo.second + d / (hi.first - lo.first) * (hi.second - lo.second);
        return acc + 0.5 * (lo.second + ft) * d;
      }
      return acc;
    }
  }
  return 0.0;
}

struct GridParams {
  double t_start = 0.0;
  double t_end = 1.0;
  double base_dt = 0.0;  ///< 0 selects 1 / (40 f0)
  /// Half-width of the refined cluster around each singular time, in base steps.
  double cluster_width = 8.0;
  int cluster_points = 32;

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

inline double default_base_dt(const SourceWavelet& w) {
  return w.kind == WaveletKind::gauss5 || w.kind == WaveletKind::gauss5_si ? 1.0 / (40.0 * w.f0) : 1e-3;
}

/// Sample times of a trace: a uniform base grid plus nodes clustered as
/// t* +- W (j/M)^2 around each singular time t*, which is itself a node.
struct TimeGrid {
  std::vector<double> t;
  double base_dt = 0.0;
};

inline TimeGrid make_grid(const GridParams& g, std::span<const double> singular_times,
                          std::span<const double> onset_times = {}) {
  if (!(g.base_dt > 0) || !(g.t_end > g.t_start) || g.cluster_points < 1 || !(g.cluster_width > 0))
    throw DomainError("invalid time grid parameters");
  struct Node {
    double t;
    int priority;
  };
  std::vector<Node> nodes;
  const auto n = static_cast<long long>(std::floor((g.t_end - g.t_start) / g.base_dt + 1e-9));
  nodes.reserve(static_cast<std::size_t>(n) + 1 + singular_times.size() * (2 * g.cluster_points + 1));
  for (long long k = 0; k <= n; ++k) nodes.push_back({g.t_start + static_cast<double>(k) * g.base_dt, 0});
  if (nodes.back().t < g.t_end) nodes.push_back({g.t_end, 0});

  const double W = g.cluster_width * g.base_dt;
  auto inside = [&](double t) { return t > g.t_start && t < g.t_end; };
  auto add_cluster = [&](double c, int prio, bool both_sides) {
    if (inside(c)) nodes.push_back({c, prio});
    for (int j = 1; j <= g.cluster_points; ++j) {
      const double s = static_cast<double>(j) / g.cluster_points;
      const double off = W * s * s;
      if (inside(c + off)) nodes.push_back({c + off, 1});
      if (both_sides && inside(c - off)) nodes.push_back({c - off, 1});
    }
  };
  for (double s : singular_times) add_cluster(s, 3, true);
  for (double s : onset_times) add_cluster(s, 2, false);

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.t < b.t; });
  TimeGrid out;
  out.base_dt = g.base_dt;
  out.t.reserve(nodes.size());
  std::vector<int> prio;
  for (const Node& nd : nodes) {
    if (!out.t.empty() && nd.t - out.t.back() <= 1e-13 * std::max(1.0, std::abs(nd.t))) {
      if (nd.priority > prio.back()) {
        out.t.back() = nd.t;
        prio.back() = nd.priority;
      }
      continue;
    }
    out.t.push_back(nd.t);
    prio.push_back(nd.priority);
  }
  return out;
}

/// Time series of one receiver: every phase channel plus their sum. Holds
/// either velocity kernels (m/s) or displacements (m).
struct Trace {
  Receiver receiver;
  std::vector<double> t;
  std::array<std::vector<Vec2>, kPhaseCount> phases;
  /// Grid index of the channel's integrable 1/sqrt singularity, if sampled.
  std::array<std::optional<std::size_t>, kPhaseCount> singular_node;
  std::vector<Vec2> total;

  /// Recomputes total as the ordered sum of the phase channels.
  void sum_phases() {
    total.assign(t.size(), Vec2{});
    for (std::size_t i = 0; i < t.size(); ++i) {
      Vec2 s;
      for (const auto& ch : phases) s += ch[i];
      total[i] = s;
    }
  }
};

/// Arrival bookkeeping for one phase at one receiver.
struct PhaseArrival {
  WavePhase phase;
  bool applicable = false;
  double t0 = 0.0;
  std::optional<double> t_head;
  bool head_gate = false;
  double onset() const { return head_gate && t_head ? *t_head : t0; }
};

inline std::array<PhaseArrival, kPhaseCount> phase_arrivals(const Model& m, const Receiver& rec) {
  std::array<PhaseArrival, kPhaseCount> out{};
  for (WavePhase p : kAllPhases) {
    PhaseKernel k(m, p, rec);
    out[index(p)] = {p, k.is_applicable(), k.t0(), k.t_head(), k.head_gate()};
  }
  return out;
}

/// Time grid for a receiver, refined around each applicable phase's
/// singular time and head-wave onset.
inline TimeGrid receiver_grid(const Model& m, const Receiver& rec, const GridParams& g) {
  std::vector<double> sing, onsets;
  for (const PhaseArrival& a : phase_arrivals(m, rec)) {
    if (!a.applicable) continue;
    sing.push_back(a.t0);
    if (a.head_gate && a.t_head) onsets.push_back(*a.t_head);
  }
  return make_grid(g, sing, onsets);
}

/// Velocity kernels of every phase on the given increasing times.
inline Trace sample_kernels(const Model& m, const Receiver& rec, std::span<const double> times) {
  Trace tr;
  tr.receiver = rec;
  tr.t.assign(times.begin(), times.end());
  for (WavePhase p : kAllPhases) {
    auto& ch = tr.phases[index(p)];
    ch.assign(times.size(), Vec2{});
    PhaseKernel k(m, p, rec);
    if (!k.is_applicable()) continue;
    const double onset = k.onset();
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] == k.t0()) tr.singular_node[index(p)] = i;
      if (times[i] > onset) ch[i] = k.at(times[i]);
    }
  }
  tr.sum_phases();
  return tr;
}

/// Displacement u = nu * W, with W the wavelet primitive, by trapezoidal
/// quadrature on the kernel's own grid. Intervals touching a channel's
/// singular node use product integration against a c / sqrt(|t - t*|)
/// profile fitted to the neighbouring sample.
inline Trace convolve(const Trace& kernel, const SourceWavelet& w) {
  const std::size_t N = kernel.t.size();
  for (const auto& ch : kernel.phases)
    if (ch.size() != N) throw DomainError("trace channel length does not match its grid");
  for (std::size_t i = 1; i < N; ++i)
    if (!(kernel.t[i] > kernel.t[i - 1])) throw DomainError("trace grid must be strictly increasing");
  if (N > 0)
    for (const auto& ch : kernel.phases)
      if (ch[0] != Vec2{})
        throw GridCoverageError("kernel grid starts after a phase arrival; it must span the whole convolution window");

  Trace out;
  out.receiver = kernel.receiver;
  out.t = kernel.t;
  out.singular_node = kernel.singular_node;
  for (auto& ch : out.phases) ch.assign(N, Vec2{});

  // Channels that are identically zero are skipped.
  std::array<bool, kPhaseCount> live{};
  for (std::size_t c = 0; c < kPhaseCount; ++c)
    live[c] = std::any_of(kernel.phases[c].begin(), kernel.phases[c].end(), [](const Vec2& v) { return v != Vec2{}; });

  // Per-channel node weights for interval [j, j+1]: ordinary trapezoid
  // unless one end is singular.
  std::vector<double> Wn(N);
  const auto& t = kernel.t;
  for (std::size_t n = 1; n < N; ++n) {
    for (std::size_t j = 0; j <= n; ++j) Wn[j] = wavelet_primitive(w, t[n] - t[j]);
    for (std::size_t c = 0; c < kPhaseCount; ++c) {
      if (!live[c]) continue;
      const auto& nu = kernel.phases[c];
      const auto s = kernel.singular_node[c];
      Vec2 acc;
      for (std::size_t j = 0; j < n; ++j) {
        const double dt = t[j + 1] - t[j];
        if (s && j + 1 == *s) {
          // Singularity at the right end: nu ~ nu_j sqrt(dt) / sqrt(t* - tau).
          acc += (dt * (4.0 / 3.0 * Wn[j + 1] + 2.0 / 3.0 * Wn[j])) * nu[j];
        } else if (s && j == *s) {
          acc += (dt * (4.0 / 3.0 * Wn[j] + 2.0 / 3.0 * Wn[j + 1])) * nu[j + 1];
        } else {
          acc += (0.5 * dt * Wn[j]) * nu[j];
          acc += (0.5 * dt * Wn[j + 1]) * nu[j + 1];
        }
      }
      out.phases[c][n] = acc;
    }
  }
  out.sum_phases();
  return out;
}

}  // namespace poro2d
