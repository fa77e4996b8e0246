#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mjmcmc/harness/benchmark.hpp"
#include "mjmcmc/io/config.hpp"
#include "mjmcmc/models/graph.hpp"
#include "mjmcmc/trace.hpp"

namespace mjmcmc::io {

/// `index,probability`, or `edge,i,j,probability` (lexicographic i < j) when
/// an edge index is given.
void write_inclusion(const std::filesystem::path& path, std::span<const double> probabilities,
                     const models::EdgeIndex* edges = nullptr);

/// `s,epsilon,flips,waiting_time,wall_time`, one row per sample.
void write_trace_meta(const std::filesystem::path& path, const ChainTrace& trace);

/// `wall_time_s,iteration,auc_pr,auc_roc,p_plus,p_minus`.
void write_metrics(const std::filesystem::path& path,
                   std::span<const harness::MetricsSnapshot> series);

/// Canonical config preceded by a `# code_version` comment.
void write_config_lock(const std::filesystem::path& path, const RunConfig& config);

/// Writes inclusion.csv, trace_meta.csv, config.lock and (when a series is
/// given) metrics.csv into `out_dir`, creating it if needed. Returns the paths.
std::vector<std::filesystem::path> write_outputs(
    const std::filesystem::path& out_dir, const RunConfig& config, const ChainTrace& trace,
    std::span<const double> inclusion, const models::EdgeIndex* edges = nullptr,
    std::optional<std::span<const harness::MetricsSnapshot>> metrics = std::nullopt);

/// Version string embedded in config.lock.
const char* code_version() noexcept;

}  // namespace mjmcmc::io
