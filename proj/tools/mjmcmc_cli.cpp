// Command-line front end: run / simulate / oracle.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mjmcmc/error.hpp"
#include "mjmcmc/harness/benchmark.hpp"
#include "mjmcmc/harness/metrics.hpp"
#include "mjmcmc/harness/synthetic.hpp"
#include "mjmcmc/io/config.hpp"
#include "mjmcmc/io/csv.hpp"
#include "mjmcmc/io/outputs.hpp"
#include "mjmcmc/io/runner.hpp"
#include "mjmcmc/models/ggm.hpp"
#include "mjmcmc/models/table.hpp"
#include "mjmcmc/oracle/checks.hpp"
#include "mjmcmc/simd/kernels.hpp"

namespace fs = std::filesystem;
using namespace mjmcmc;

namespace {

const char* kUsage =
    "usage: mjmcmc <command> [options]\n"
    "\n"
    "commands:\n"
    "  run       sample a posterior (toy, ggm, ising, bvs) and write inclusion.csv etc.\n"
    "  simulate  synthetic GGM instances, BD baseline vs multiple-jump benchmark\n"
    "  oracle    exact small-space checks on a random posterior\n"
    "  version   print the version\n"
    "\n"
    "`mjmcmc <command> --help` lists the options of a command.\n";

int cmd_run(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") {
      std::cout << io::config_help();
      return 0;
    }
  }
  const io::RunConfig config = io::parse_config(args);
  const io::RunResult result = io::execute_run(config);
  std::cout << "model " << io::model_name(config.model) << ", sampler " << io::sampler_name(config.sampler)
            << ", k = " << result.inclusion.size() << ", samples = " << result.trace.size() << '\n';
  for (const auto& f : result.files) std::cout << "wrote " << f.string() << '\n';
  return 0;
}

int cmd_simulate(std::vector<std::string> args) {
  CLI::App app("Synthetic GGM benchmark: BD baseline against multiple-jump samplers");
  std::size_t p = 50, n = 200, seeds = 1, iters = 2000, bd_events = 20000, threads = 1;
  std::uint64_t seed = 1;
  double alpha = 0.04, prior = 0.04;
  std::vector<double> eps{0.3};
  std::string out = "simulate_out";
  app.add_option("--p", p, "Nodes")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  app.add_option("--n", n, "Observations")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  app.add_option("--alpha", alpha, "True edge density")->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", seed, "First instance seed");
  app.add_option("--seeds", seeds, "Number of instances")->check(CLI::PositiveNumber);
  app.add_option("--eps", eps, "Constant epsilons for the multiple-jump runs")->delimiter(',');
  app.add_option("--iters", iters, "Multiple-jump iterations")->check(CLI::PositiveNumber);
  app.add_option("--bd-events", bd_events, "Birth-death events")->check(CLI::PositiveNumber);
  app.add_option("--prior", prior, "Prior edge density")->check(CLI::Range(1e-9, 1.0 - 1e-9));
  app.add_option("--threads", threads, "Configs run in parallel");
  app.add_option("--out", out, "Output directory");
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  for (double e : eps)
    if (!(e > 0.0 && e < 1.0)) throw ConfigError("eps: each value must lie in (0,1)");

  std::vector<harness::SamplerConfig> configs;
  configs.push_back({"bd", harness::SamplerKind::BirthDeath, EpsilonSchedule::constant(0.5), bd_events, {}, 0});
  for (double e : eps) {
    char name[64];
    std::snprintf(name, sizeof name, "mj_%g", e);
    configs.push_back({name, harness::SamplerKind::MultipleJump, EpsilonSchedule::constant(e), iters, {}, 0});
  }

  std::vector<std::vector<double>> final_pr(configs.size()), final_roc(configs.size());
  for (std::size_t r = 0; r < seeds; ++r) {
    const std::uint64_t s = seed + r;
    const auto inst = harness::generate_ggm_instance(p, n, alpha, s);
    const auto truth = inst.truth();
    const models::GgmModel model(inst.data, {prior, 1'000'000});
    for (auto& c : configs) c.seed = s;
    harness::CheckpointSchedule checkpoints;
    checkpoints.every_iterations = 0;
    const auto reports =
        harness::run_benchmark(model, truth, BinaryModel(model.size()), configs, checkpoints, threads);

    const fs::path dir = fs::path(out) / ("seed_" + std::to_string(s));
    fs::create_directories(dir);
    std::ofstream scores(dir / "truth_scores.csv");
    if (!scores) throw IoError("cannot write " + (dir / "truth_scores.csv").string());
    scores << "edge,i,j,truth";
    for (const auto& rep : reports) scores << ',' << rep.name;
    scores << '\n';
    for (std::size_t e = 0; e < truth.size(); ++e) {
      const auto [i, j] = model.edge_index().endpoints(e);
      scores << e << ',' << i << ',' << j << ',' << int(truth[e]);
      for (const auto& rep : reports) scores << ',' << io::format_double(rep.inclusion[e]);
      scores << '\n';
    }
    for (std::size_t c = 0; c < reports.size(); ++c) {
      io::write_metrics(dir / (reports[c].name + "_metrics.csv"), reports[c].series);
      final_pr[c].push_back(reports[c].final.auc_pr);
      final_roc[c].push_back(reports[c].final.auc_roc);
      std::printf("seed %llu  %-10s auc_pr %.4f  auc_roc %.4f  p+ %.4f  p- %.4f  %.2fs\n",
                  static_cast<unsigned long long>(s), reports[c].name.c_str(), reports[c].final.auc_pr,
                  reports[c].final.auc_roc, reports[c].final.p_plus, reports[c].final.p_minus,
                  reports[c].wall_time);
    }
  }
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const auto pr = harness::mean_and_se(final_pr[c]);
    const auto roc = harness::mean_and_se(final_roc[c]);
    std::printf("mean  %-10s auc_pr %.4f +- %.4f  auc_roc %.4f +- %.4f\n", configs[c].name.c_str(), pr.mean,
                pr.se, roc.mean, roc.se);
  }
  return 0;
}

int cmd_oracle(std::vector<std::string> args) {
  CLI::App app("Exact checks of the multiple-jump kernel on a random posterior");
  std::size_t k = 6;
  std::uint64_t seed = 1;
  double scale = 1.0, mh_eps = 0.5, small_eps = 1e-4;
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  app.add_option("--k", k, "Elements (1..12)")->check(CLI::Range(std::size_t{1}, oracle::kMaxK));
  app.add_option("--seed", seed, "Seed of the random log weights");
  app.add_option("--scale", scale, "Standard deviation of the log weights")->check(CLI::PositiveNumber);
  app.add_option("--eps", eps, "Epsilons for the bias and residual fits")->delimiter(',');
  app.add_option("--mh-eps", mh_eps, "Epsilon of the corrected kernel")->check(CLI::Range(1e-12, 1.0 - 1e-12));
  app.add_option("--small-eps", small_eps, "Epsilon for the waiting-time and jump limits")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (eps.size() < 2) throw ConfigError("eps: need at least two values for a slope");
  for (double e : eps)
    if (!(e > 0.0 && e < 1.0)) throw ConfigError("eps: each value must lie in (0,1)");

  const auto model = models::TablePosterior::random(k, seed, scale);
  std::printf("kernels: %s\n", simd::isa_name(simd::active_kernels().isa));

  const auto bias = oracle::bias_slope(model, k, eps);
  std::printf("stationary bias TV(pi_eps, pi):\n");
  for (std::size_t i = 0; i < eps.size(); ++i) std::printf("  eps %-8g %.6e\n", eps[i], bias.tv[i]);
  if (bias.exact)
    std::printf("  exact at every eps\n");
  else
    std::printf("  log-log slope %.4f\n", bias.slope);

  const auto residual = oracle::kernel_rate_residual(model, k, eps);
  std::printf("kernel/rate residual ||P - I - eps Q||_max slope %.4f\n", residual.slope);

  const auto pi = oracle::bd_stationary(model, k);
  const auto mh = oracle::build_mh_kernel(model, k, mh_eps);
  const auto pi_mh = oracle::stationary_distribution(mh);
  const auto balance = oracle::check_detailed_balance(mh, pi, 1e-12);
  std::printf("corrected kernel eps %g: TV to pi %.3e, detailed-balance violation %.3e\n", mh_eps,
              oracle::tv_distance(pi_mh, pi), balance.max_violation);

  const BinaryModel m0(k);
  const auto wait = oracle::waiting_time_check(model, m0, {small_eps});
  const auto jump = oracle::jump_probability_check(model, m0, {small_eps});
  std::printf("at the empty model, eps %g: wait mean %.6g (1/lambda %.6g), CDF sup error %.3e\n", small_eps,
              wait[0].mean_scaled_wait, wait[0].target, wait[0].cdf_sup_error);
  std::printf("  neighbour jump error %.3e, non-neighbour mass %.3e\n", jump[0].max_neighbour_error,
              jump[0].non_neighbour_total);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  const std::string command = argv[1];
  std::vector<std::string> rest(argv + 2, argv + argc);
  try {
    if (command == "run") return cmd_run(rest);
    if (command == "simulate") return cmd_simulate(rest);
    if (command == "oracle") return cmd_oracle(rest);
    if (command == "version" || command == "--version") {
      std::cout << "mjmcmc " << io::code_version() << '\n';
      return 0;
    }
    if (command == "-h" || command == "--help" || command == "help") {
      std::cout << kUsage;
      return 0;
    }
    std::cerr << "unknown command '" << command << "'\n" << kUsage;
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
