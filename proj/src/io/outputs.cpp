#include "mjmcmc/io/outputs.hpp"

#include <fstream>

#include "mjmcmc/error.hpp"
#include "mjmcmc/io/csv.hpp"

#ifndef MJMCMC_VERSION
#define MJMCMC_VERSION "unknown"
#endif

namespace mjmcmc::io {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace

const char* code_version() noexcept { return MJMCMC_VERSION; }

void write_inclusion(const std::filesystem::path& path, std::span<const double> probabilities,
                     const models::EdgeIndex* edges) {
  auto out = open_for_write(path);
  if (edges) {
    if (edges->edges() != probabilities.size()) throw Error("inclusion length does not match the edge index");
    out << "edge,i,j,probability\n";
    for (std::size_t e = 0; e < probabilities.size(); ++e) {
      const auto [i, j] = edges->endpoints(e);
      out << e << ',' << i << ',' << j << ',' << format_double(probabilities[e]) << '\n';
    }
  } else {
    out << "index,probability\n";
    for (std::size_t i = 0; i < probabilities.size(); ++i)
      out << i << ',' << format_double(probabilities[i]) << '\n';
  }
  finish(out, path);
}

void write_trace_meta(const std::filesystem::path& path, const ChainTrace& trace) {
  auto out = open_for_write(path);
  out << "s,epsilon,flips,waiting_time,wall_time\n";
  for (std::size_t s = 0; s < trace.size(); ++s) {
    out << s + 1 << ',' << format_double(trace.epsilons()[s]) << ',' << trace.flip_counts()[s] << ','
        << format_double(trace.waiting_times()[s]) << ',' << format_double(trace.wall_times()[s]) << '\n';
  }
  finish(out, path);
}

void write_metrics(const std::filesystem::path& path,
                   std::span<const harness::MetricsSnapshot> series) {
  auto out = open_for_write(path);
  out << "wall_time_s,iteration,auc_pr,auc_roc,p_plus,p_minus\n";
  for (const auto& snap : series) {
    out << format_double(snap.wall_time) << ',' << snap.iteration << ','
        << format_double(snap.metrics.auc_pr) << ',' << format_double(snap.metrics.auc_roc) << ','
        << format_double(snap.metrics.p_plus) << ',' << format_double(snap.metrics.p_minus) << '\n';
  }
  finish(out, path);
}

void write_config_lock(const std::filesystem::path& path, const RunConfig& config) {
  auto out = open_for_write(path);
  out << "# code_version = " << code_version() << '\n' << serialize(config);
  finish(out, path);
}

std::vector<std::filesystem::path> write_outputs(
    const std::filesystem::path& out_dir, const RunConfig& config, const ChainTrace& trace,
    std::span<const double> inclusion, const models::EdgeIndex* edges,
    std::optional<std::span<const harness::MetricsSnapshot>> metrics) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written{out_dir / "inclusion.csv", out_dir / "trace_meta.csv",
                                             out_dir / "config.lock"};
  write_inclusion(written[0], inclusion, edges);
  write_trace_meta(written[1], trace);
  write_config_lock(written[2], config);
  if (metrics) {
    written.push_back(out_dir / "metrics.csv");
    write_metrics(written.back(), *metrics);
  }
  return written;
}

}  // namespace mjmcmc::io
