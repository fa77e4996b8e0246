#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "mjmcmc/io/config.hpp"
#include "mjmcmc/models/graph.hpp"
#include "mjmcmc/posterior_model.hpp"
#include "mjmcmc/trace.hpp"

namespace mjmcmc::io {

struct LoadedModel {
  std::unique_ptr<PosteriorModel> model;
  /// Set for graph models (ggm, ising).
  std::unique_ptr<models::EdgeIndex> edges;
};

/// Builds the posterior described by the config, loading its data file.
LoadedModel load_model(const RunConfig& config);

struct RunResult {
  ChainTrace trace;
  std::vector<double> inclusion;
  std::vector<std::filesystem::path> files;
};

/// Runs the configured sampler and writes all outputs to config.out.
/// `threads` = 0 uses the default thread count; results do not depend on it.
RunResult execute_run(const RunConfig& config, std::size_t threads = 0);

}  // namespace mjmcmc::io
