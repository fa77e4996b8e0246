#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mjmcmc/samplers.hpp"
#include "mjmcmc/schedule.hpp"

namespace mjmcmc::io {

enum class ModelKind { Toy, Ggm, Ising, Bvs };
enum class SamplerChoice { Mj, Bd, Mh };

/// Everything needed to reproduce a `run`. Keys (flag `--key`, or `key = value`
/// in a config file):
///
///   model          toy | ggm | ising | bvs
///   data           CSV path (bvs: first column is the response)
///   truth          optional 0/1 CSV, one value per element, enables metrics.csv
///   toy-k          k of the toy posterior (random log weights from the seed)
///   sampler        mj | bd | mh
///   eps            constant:x | slow:x | fast:x | table:<path>
///   iters          S (events for bd)
///   seed, burn-in, max-jump (r), max-jump-iters, prior (rho), g (number or n),
///   ebic-gamma, out, checkpoint
struct RunConfig {
  ModelKind model = ModelKind::Toy;
  std::string data;
  std::string truth;
  std::size_t toy_k = 6;
  SamplerChoice sampler = SamplerChoice::Mj;
  std::string eps = "constant:0.3";
  std::size_t iters = 1000;
  std::uint64_t seed = 1;
  double burn_in = 0.25;
  double max_jump = 1.0;
  std::size_t max_jump_iters = 5;
  double prior = 0.5;
  /// nullopt means g = n.
  std::optional<double> g;
  double ebic_gamma = 0.0;
  std::string out = "out";
  std::size_t checkpoint = 1000;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses flags (argv-style, without the program / subcommand name). `--config
/// <file>` loads a file first; flags override it. Unknown keys and out-of-range
/// values raise ConfigError naming the key.
RunConfig parse_config(const std::vector<std::string>& args);

/// Help text for the run options.
std::string config_help();

/// Range checks; throws ConfigError naming the offending key.
void validate(const RunConfig& config);

/// `key = value` lines in a fixed order; parse_config(--config) reads it back.
std::string serialize(const RunConfig& config);

/// Resolves a schedule spec, reading `table:<path>` files (one value per line
/// or comma-separated). Relative table paths resolve against `base_dir`.
EpsilonSchedule parse_schedule_spec(const std::string& spec,
                                    const std::filesystem::path& base_dir = {});

/// Burn-in cap from max-jump / max-jump-iters (nullopt when r = 1).
std::optional<MaxJumpCap> cap_of(const RunConfig& config);

const char* model_name(ModelKind kind) noexcept;
const char* sampler_name(SamplerChoice kind) noexcept;

}  // namespace mjmcmc::io
