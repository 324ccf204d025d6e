#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "poro2d/config.hpp"
#include "poro2d/greens.hpp"
#include "poro2d/source_conv.hpp"

namespace poro2d {

/// Failure while computing traces, with the receiver it happened at.
struct ComputeError : Error {
  using Error::Error;
};

struct ReceiverResult {
  std::size_t index = 0;  ///< position in the config's receiver list
  Receiver receiver;
  std::array<PhaseArrival, kPhaseCount> arrivals{};
  Trace displacement;
};

struct CampaignResult {
  std::vector<ReceiverResult> receivers;
  std::vector<std::filesystem::path> files;
};

inline std::string trace_file_name(std::size_t index) { return "receiver_" + std::to_string(index + 1) + ".csv"; }

inline ReceiverResult compute_receiver(const Model& m, const RunConfig& cfg, std::size_t index) {
  ReceiverResult out;
  out.index = index;
  out.receiver = cfg.receivers.at(index);
  out.arrivals = phase_arrivals(m, out.receiver);
  const TimeGrid grid = receiver_grid(m, out.receiver, cfg.resolved_grid());
  out.displacement = convolve(sample_kernels(m, out.receiver, grid.t), cfg.wavelet);
  return out;
}

/// Traces for every receiver, computed on up to `threads` workers
/// (0 picks the hardware concurrency).
inline std::vector<ReceiverResult> compute_campaign(const RunConfig& cfg, unsigned threads = 0) {
  const Model m = make_model(cfg.top, cfg.bottom, cfg.source_depth, cfg.mix);
  const std::size_t n = cfg.receivers.size();
  std::vector<ReceiverResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = compute_receiver(m, cfg, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = std::min<std::size_t>(threads, n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    const Receiver& r = cfg.receivers[i];
    std::ostringstream os;
    os << "receiver " << i + 1 << " (" << format_number(r.x) << ", " << format_number(r.y) << "): ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      os << e.what();
    }
    throw ComputeError(os.str());
  }
  return results;
}

/// CSV with a header row: t, ux_total, uy_total, then ux_<phase>, uy_<phase>
/// for all fourteen phases when decompose is set.
inline void write_trace_csv(std::ostream& os, const Trace& tr, bool decompose) {
  os << "t,ux_total,uy_total";
  if (decompose)
    for (WavePhase p : kAllPhases) os << ",ux_" << phase_name(p) << ",uy_" << phase_name(p);
  os << '\n';
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    os << format_number(tr.t[i]) << ',' << format_number(tr.total[i].x) << ',' << format_number(tr.total[i].y);
    if (decompose)
      for (const auto& ch : tr.phases) os << ',' << format_number(ch[i].x) << ',' << format_number(ch[i].y);
    os << '\n';
  }
}

/// One row per (receiver, phase): arrival times and head-wave gate.
inline void write_manifest(std::ostream& os, const std::vector<ReceiverResult>& results) {
  os << "receiver,x,y,file,phase,applicable,t0,t_head,head_gate,onset\n";
  for (const ReceiverResult& r : results)
    for (const PhaseArrival& a : r.arrivals) {
      os << r.index + 1 << ',' << format_number(r.receiver.x) << ',' << format_number(r.receiver.y) << ','
         << trace_file_name(r.index) << ',' << phase_name(a.phase) << ',' << (a.applicable ? "true" : "false")
         << ',' << format_number(a.t0) << ',' << (a.t_head ? format_number(*a.t_head) : std::string()) << ','
         << (a.head_gate ? "open" : "closed") << ',' << format_number(a.onset()) << '\n';
    }
}

/// Gnuplot script drawing uy against t for each receiver, with the phase
/// channels overlaid when decomposed and a marker at every arrival.
inline std::string emit_gnuplot(const RunConfig& cfg, const std::vector<ReceiverResult>& results) {
  std::ostringstream os;
  os << "# uy displacement traces\n";
  os << "set datafile separator ','\n";
  os << "set terminal pngcairo size 1200,800\n";
  os << "set xlabel 't (s)'\nset ylabel 'u_y (m)'\nset key outside right\n";
  os << "set xrange [" << format_number(cfg.grid.t_start) << ':' << format_number(cfg.grid.t_end) << "]\n";
  if (results.empty()) {
    os << "# warning: no traces to plot\n";
    os << "set output 'empty.png'\nplot 0 notitle\n";
    return os.str();
  }
  for (const ReceiverResult& r : results) {
    const std::string csv = trace_file_name(r.index);
    os << "\nset output '" << csv.substr(0, csv.size() - 4) << ".png'\n";
    os << "set title 'receiver " << r.index + 1 << " (" << format_number(r.receiver.x) << ", "
       << format_number(r.receiver.y) << ")'\n";
    os << "unset arrow\n";
    for (const PhaseArrival& a : r.arrivals) {
      if (!a.applicable || a.onset() < cfg.grid.t_start || a.onset() > cfg.grid.t_end) continue;
      os << "set arrow from " << format_number(a.onset()) << ", graph 0 to " << format_number(a.onset())
         << ", graph 1 nohead dashtype 3 lc rgb 'gray'  # " << phase_name(a.phase) << '\n';
    }
    os << "plot '" << csv << "' using 1:3 with lines lw 2 lc rgb 'black' title 'total'";
    if (cfg.decompose) {
      int style = 2;
      for (WavePhase p : kAllPhases) {
        if (!applicable(p, r.receiver)) continue;
        os << ", \\\n     '' using 1:" << 5 + 2 * index(p) << " with lines dashtype " << style++ << " title '"
           << phase_name(p) << "'";
      }
    }
    os << '\n';
  }
  return os.str();
}

/// Computes every receiver and writes the CSV traces, manifest.csv and,
/// when requested, plot.gp into the output directory.
inline CampaignResult run_campaign(const RunConfig& cfg, unsigned threads = 0) {
  CampaignResult out;
  out.receivers = compute_campaign(cfg, threads);
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, auto&& body) {
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    body(f);
    if (!f) throw Error("failed writing " + path.string());
    out.files.push_back(path);
  };
  for (const ReceiverResult& r : out.receivers)
    write(trace_file_name(r.index), [&](std::ostream& f) { write_trace_csv(f, r.displacement, cfg.decompose); });
  write("manifest.csv", [&](std::ostream& f) { write_manifest(f, out.receivers); });
  if (cfg.gnuplot) write("plot.gp", [&](std::ostream& f) { f << emit_gnuplot(cfg, out.receivers); });
  return out;
}

}  // namespace poro2d
