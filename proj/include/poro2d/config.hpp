#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "poro2d/greens.hpp"
#include "poro2d/source_conv.hpp"

namespace poro2d {

/// Malformed or invalid configuration. line is 0 when the problem is not
/// tied to one line (missing keys, cross-field invariants).
struct ConfigError : Error {
  std::size_t line = 0;
  ConfigError(std::size_t ln, const std::string& what)
      : Error(ln ? "line " + std::to_string(ln) + ": " + what : what), line(ln) {}
};

struct RunConfig {
  PoroelasticMaterial top;
  PoroelasticMaterial bottom;
  double source_depth = 0.0;
  SourceMix mix;
  SourceWavelet wavelet;
  std::vector<Receiver> receivers;
  GridParams grid;  ///< base_dt == 0 selects the wavelet's default
  bool decompose = true;
  bool gnuplot = false;
  std::string output_dir = "out";

  /// Grid with the default step filled in.
  GridParams resolved_grid() const {
    GridParams g = grid;
    if (!(g.base_dt > 0)) g.base_dt = default_base_dt(wavelet);
    return g;
  }
};

/// Shortest decimal text that reads back to the same binary64.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(std::string_view s, std::size_t line, std::string_view key) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty() || !std::isfinite(v))
    throw ConfigError(line, "key '" + std::string(key) + "': '" + std::string(s) + "' is not a finite number");
  return v;
}

inline std::pair<double, double> parse_pair(std::string_view s, std::size_t line, std::string_view key) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
    throw ConfigError(line, "key '" + std::string(key) + "' expects two comma-separated numbers");
  return {parse_number(s.substr(0, comma), line, key), parse_number(s.substr(comma + 1), line, key)};
}

inline bool parse_bool(std::string_view s, std::size_t line, std::string_view key) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ConfigError(line, "key '" + std::string(key) + "' expects true or false");
}

inline WaveletKind parse_wavelet(std::string_view s, std::size_t line) {
  if (s == "gauss5") return WaveletKind::gauss5;
  if (s == "gauss5_si") return WaveletKind::gauss5_si;
  if (s == "delta") return WaveletKind::delta;
  if (s == "custom") return WaveletKind::custom;
  throw ConfigError(line, "unknown wavelet '" + std::string(s) + "' (gauss5, gauss5_si, delta, custom)");
}

inline std::string_view wavelet_name(WaveletKind k) {
  switch (k) {
    case WaveletKind::gauss5: return "gauss5";
    case WaveletKind::gauss5_si: return "gauss5_si";
    case WaveletKind::delta: return "delta";
    case WaveletKind::custom: return "custom";
  }
  return "gauss5";
}

struct Entry {
  std::string value;
  std::size_t line;
};

inline const std::array<std::string_view, 8> kMaterialKeys{"rho_s", "rho_f", "phi", "tortuosity",
                                                           "K_s",   "K_f",   "K_b", "mu"};

inline const std::map<std::string, std::set<std::string>, std::less<>>& schema() {
  static const std::map<std::string, std::set<std::string>, std::less<>> s{
      {"layer.top", {kMaterialKeys.begin(), kMaterialKeys.end()}},
      {"layer.bottom", {kMaterialKeys.begin(), kMaterialKeys.end()}},
      {"source", {"depth", "f_u", "f_w", "f_p", "wavelet", "f0", "sample"}},
      {"receivers", {"receiver"}},
      {"grid", {"t_start", "t_end", "base_dt", "cluster_width", "cluster_points"}},
      {"output", {"directory", "decompose", "gnuplot"}},
  };
  return s;
}

inline bool repeatable(std::string_view key) { return key == "receiver" || key == "sample"; }

}  // namespace detail

/// Checks the cross-field invariants of a configuration.
inline void validate(const RunConfig& c) {
  try {
    validate(c.top);
  } catch (const Error& e) {
    throw ConfigError(0, std::string("[layer.top] ") + e.what());
  }
  try {
    validate(c.bottom);
  } catch (const Error& e) {
    throw ConfigError(0, std::string("[layer.bottom] ") + e.what());
  }
  if (!(c.source_depth > 0) || !std::isfinite(c.source_depth)) throw ConfigError(0, "source depth must be > 0");
  if (c.receivers.empty()) throw ConfigError(0, "at least one receiver is required");
  for (const Receiver& r : c.receivers) {
    if (r.y == 0.0) throw ConfigError(0, "receivers must not lie on the interface y = 0");
    if (r.x == 0.0 && r.y == c.source_depth) throw ConfigError(0, "a receiver coincides with the source");
  }
  const SourceWavelet& w = c.wavelet;
  if ((w.kind == WaveletKind::gauss5 || w.kind == WaveletKind::gauss5_si) && !(w.f0 > 0))
    throw ConfigError(0, "wavelet f0 must be > 0");
  if (w.kind == WaveletKind::custom) {
    try {
      detail::check_custom(w);
    } catch (const Error& e) {
      throw ConfigError(0, e.what());
    }
  }
  const GridParams& g = c.grid;
  if (!(g.t_end > g.t_start)) throw ConfigError(0, "grid t_end must exceed t_start");
  if (g.base_dt < 0) throw ConfigError(0, "grid base_dt must be >= 0 (0 selects the default)");
  if (!(g.cluster_width > 0)) throw ConfigError(0, "grid cluster_width must be > 0");
  if (g.cluster_points < 1) throw ConfigError(0, "grid cluster_points must be >= 1");
  if (c.output_dir.empty()) throw ConfigError(0, "output directory must not be empty");
}

/// Parses the sectioned key = value format. Lines starting with '#' or ';'
/// are comments. Unknown sections or keys and repeated keys (other than
/// receiver and sample) are rejected.
inline RunConfig parse_config(std::string_view text) {
  using detail::Entry;
  std::map<std::string, std::map<std::string, std::vector<Entry>>> sections;
  std::map<std::string, std::size_t> section_line;
  std::string current;
  std::size_t ln = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++ln;
    const std::string_view s = detail::trim(raw);
    if (s.empty() || s.front() == '#' || s.front() == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(ln, "malformed section header");
      current = std::string(detail::trim(s.substr(1, s.size() - 2)));
      if (!detail::schema().count(current)) throw ConfigError(ln, "unknown section [" + current + "]");
      if (section_line.count(current)) throw ConfigError(ln, "duplicate section [" + current + "]");
      section_line[current] = ln;
      sections[current];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ConfigError(ln, "expected 'key = value'");
    if (current.empty()) throw ConfigError(ln, "key outside of any section");
    const std::string key(detail::trim(s.substr(0, eq)));
    const std::string value(detail::trim(s.substr(eq + 1)));
    if (key.empty()) throw ConfigError(ln, "empty key");
    if (!detail::schema().at(current).count(key)) throw ConfigError(ln, "unknown key '" + key + "' in [" + current + "]");
    auto& slot = sections[current][key];
    if (!slot.empty() && !detail::repeatable(key))
      throw ConfigError(ln, "duplicate key '" + key + "' in [" + current + "] (first on line " +
                                std::to_string(slot.front().line) + ")");
    slot.push_back({value, ln});
  }

  auto find = [&](const std::string& sec, const std::string& key) -> const Entry* {
    auto s = sections.find(sec);
    if (s == sections.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second.front();
  };
  auto required_number = [&](const std::string& sec, const std::string& key) {
    const Entry* e = find(sec, key);
    if (!e) throw ConfigError(0, "missing key '" + key + "' in [" + sec + "]");
    return detail::parse_number(e->value, e->line, key);
  };
  auto optional_number = [&](const std::string& sec, const std::string& key, double fallback) {
    const Entry* e = find(sec, key);
    return e ? detail::parse_number(e->value, e->line, key) : fallback;
  };

  RunConfig c;
  for (const auto& [sec, mat] : {std::pair<std::string, PoroelasticMaterial*>{"layer.top", &c.top},
                                 std::pair<std::string, PoroelasticMaterial*>{"layer.bottom", &c.bottom}}) {
    if (!sections.count(sec)) throw ConfigError(0, "missing section [" + sec + "]");
    mat->rho_s = required_number(sec, "rho_s");
    mat->rho_f = required_number(sec, "rho_f");
    mat->phi = required_number(sec, "phi");
    mat->a = required_number(sec, "tortuosity");
    mat->K_s = required_number(sec, "K_s");
    mat->K_f = required_number(sec, "K_f");
    mat->K_b = required_number(sec, "K_b");
    mat->mu = required_number(sec, "mu");
  }

  if (!sections.count("source")) throw ConfigError(0, "missing section [source]");
  c.source_depth = required_number("source", "depth");
  c.mix.f_u = optional_number("source", "f_u", 0.0);
  c.mix.f_w = optional_number("source", "f_w", 0.0);
  c.mix.f_p = optional_number("source", "f_p", 0.0);
  if (const Entry* e = find("source", "wavelet")) c.wavelet.kind = detail::parse_wavelet(e->value, e->line);
  c.wavelet.f0 = optional_number("source", "f0", c.wavelet.f0);
  if (sections["source"].count("sample")) {
    if (c.wavelet.kind != WaveletKind::custom) {
      throw ConfigError(sections["source"]["sample"].front().line, "sample lines need wavelet = custom");
    }
    for (const Entry& e : sections["source"]["sample"]) c.wavelet.samples.push_back(detail::parse_pair(e.value, e.line, "sample"));
  }

  if (sections.count("receivers") && sections["receivers"].count("receiver"))
    for (const Entry& e : sections["receivers"]["receiver"]) {
      auto [x, y] = detail::parse_pair(e.value, e.line, "receiver");
      c.receivers.push_back({x, y});
    }

  c.grid.t_start = optional_number("grid", "t_start", 0.0);
  c.grid.t_end = optional_number("grid", "t_end", 1.0);
  c.grid.base_dt = optional_number("grid", "base_dt", 0.0);
  c.grid.cluster_width = optional_number("grid", "cluster_width", c.grid.cluster_width);
  if (const Entry* e = find("grid", "cluster_points")) {
    const double v = detail::parse_number(e->value, e->line, "cluster_points");
    if (v != std::floor(v) || v < 1 || v > 1e6) throw ConfigError(e->line, "cluster_points must be a positive integer");
    c.grid.cluster_points = static_cast<int>(v);
  }

  if (const Entry* e = find("output", "directory")) c.output_dir = e->value;
  if (const Entry* e = find("output", "decompose")) c.decompose = detail::parse_bool(e->value, e->line, "decompose");
  if (const Entry* e = find("output", "gnuplot")) c.gnuplot = detail::parse_bool(e->value, e->line, "gnuplot");

  validate(c);
  return c;
}

/// Canonical text form: every section and key in a fixed order.
inline std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  auto layer = [&](const char* name, const PoroelasticMaterial& m) {
    os << '[' << name << "]\n";
    os << "rho_s = " << format_number(m.rho_s) << '\n';
    os << "rho_f = " << format_number(m.rho_f) << '\n';
    os << "phi = " << format_number(m.phi) << '\n';
    os << "tortuosity = " << format_number(m.a) << '\n';
    os << "K_s = " << format_number(m.K_s) << '\n';
    os << "K_f = " << format_number(m.K_f) << '\n';
    os << "K_b = " << format_number(m.K_b) << '\n';
    os << "mu = " << format_number(m.mu) << "\n\n";
  };
  layer("layer.top", c.top);
  layer("layer.bottom", c.bottom);
  os << "[source]\n";
  os << "depth = " << format_number(c.source_depth) << '\n';
  os << "f_u = " << format_number(c.mix.f_u) << '\n';
  os << "f_w = " << format_number(c.mix.f_w) << '\n';
  os << "f_p = " << format_number(c.mix.f_p) << '\n';
  os << "wavelet = " << detail::wavelet_name(c.wavelet.kind) << '\n';
  os << "f0 = " << format_number(c.wavelet.f0) << '\n';
  if (c.wavelet.kind == WaveletKind::custom)
    for (const auto& [t, v] : c.wavelet.samples) os << "sample = " << format_number(t) << ", " << format_number(v) << '\n';
  os << "\n[receivers]\n";
  for (const Receiver& r : c.receivers) os << "receiver = " << format_number(r.x) << ", " << format_number(r.y) << '\n';
  os << "\n[grid]\n";
  os << "t_start = " << format_number(c.grid.t_start) << '\n';
  os << "t_end = " << format_number(c.grid.t_end) << '\n';
  os << "base_dt = " << format_number(c.grid.base_dt) << '\n';
  os << "cluster_width = " << format_number(c.grid.cluster_width) << '\n';
  os << "cluster_points = " << c.grid.cluster_points << '\n';
  os << "\n[output]\n";
  os << "directory = " << c.output_dir << '\n';
  os << "decompose = " << (c.decompose ? "true" : "false") << '\n';
  os << "gnuplot = " << (c.gnuplot ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace poro2d
