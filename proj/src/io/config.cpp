#include "mjmcmc/io/config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "mjmcmc/error.hpp"
#include "mjmcmc/io/csv.hpp"

namespace mjmcmc::io {
namespace {

struct RawConfig {
  std::string model = "toy";
  std::string sampler = "mj";
  std::string g = "n";
  RunConfig typed;
};

void add_options(CLI::App& app, RawConfig& raw) {
  RunConfig& c = raw.typed;
  app.set_config("--config", "", "Read options from a key = value file (flags override it)");
  app.allow_config_extras(false);
  app.add_option("--model", raw.model, "toy | ggm | ising | bvs");
  app.add_option("--data", c.data, "Data CSV (bvs: response in the first column)");
  app.add_option("--truth", c.truth, "Optional 0/1 truth CSV, enables metrics.csv");
  app.add_option("--toy-k", c.toy_k, "Number of elements of the toy posterior");
  app.add_option("--sampler", raw.sampler, "mj | bd | mh");
  app.add_option("--eps", c.eps, "constant:x | slow:x | fast:x | table:<path>");
  app.add_option("--iters", c.iters, "Iterations (events for bd)");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--burn-in", c.burn_in, "Burn-in fraction in [0,1)");
  app.add_option("--max-jump", c.max_jump, "Burn-in cap r: at most ceil(r k) flips");
  app.add_option("--max-jump-iters", c.max_jump_iters, "Iterations under the cap");
  app.add_option("--prior", c.prior, "Prior inclusion probability");
  app.add_option("--g", raw.g, "g-prior scale (number or n)");
  app.add_option("--ebic-gamma", c.ebic_gamma, "Extended BIC gamma (Ising)");
  app.add_option("--out", c.out, "Output directory");
  app.add_option("--checkpoint", c.checkpoint, "Trace checkpoint interval");
}

ModelKind parse_model(const std::string& s) {
  if (s == "toy") return ModelKind::Toy;
  if (s == "ggm") return ModelKind::Ggm;
  if (s == "ising") return ModelKind::Ising;
  if (s == "bvs") return ModelKind::Bvs;
  throw ConfigError("model: unknown kind '" + s + "' (expected toy, ggm, ising or bvs)");
}

SamplerChoice parse_sampler(const std::string& s) {
  if (s == "mj") return SamplerChoice::Mj;
  if (s == "bd") return SamplerChoice::Bd;
  if (s == "mh") return SamplerChoice::Mh;
  throw ConfigError("sampler: unknown kind '" + s + "' (expected mj, bd or mh)");
}

std::optional<double> parse_g(const std::string& s) {
  if (s == "n") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("g: expected a positive number or 'n', got '" + s + "'");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const char* model_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Toy: return "toy";
    case ModelKind::Ggm: return "ggm";
    case ModelKind::Ising: return "ising";
    case ModelKind::Bvs: return "bvs";
  }
  return "?";
}

const char* sampler_name(SamplerChoice kind) noexcept {
  switch (kind) {
    case SamplerChoice::Mj: return "mj";
    case SamplerChoice::Bd: return "bd";
    case SamplerChoice::Mh: return "mh";
  }
  return "?";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app("mjmcmc run");
  RawConfig raw;
  add_options(app, raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  RunConfig c = raw.typed;
  c.model = parse_model(raw.model);
  c.sampler = parse_sampler(raw.sampler);
  c.g = parse_g(raw.g);
  validate(c);
  return c;
}

std::string config_help() {
  CLI::App app("Run a sampler on user data or a toy posterior");
  RawConfig raw;
  add_options(app, raw);
  return app.help();
}

void validate(const RunConfig& c) {
  if (c.model != ModelKind::Toy && c.data.empty())
    throw ConfigError(std::string("data: required for model ") + model_name(c.model));
  if (c.model == ModelKind::Toy && (c.toy_k < 1 || c.toy_k > 20))
    throw ConfigError("toy-k: must lie in [1, 20], got " + std::to_string(c.toy_k));
  if (c.iters < 1) throw ConfigError("iters: must be at least 1");
  if (!(c.burn_in >= 0.0 && c.burn_in < 1.0))
    throw ConfigError("burn-in: must lie in [0,1), got " + format_double(c.burn_in));
  if (!(c.max_jump > 0.0 && c.max_jump <= 1.0))
    throw ConfigError("max-jump: r must lie in (0,1], got " + format_double(c.max_jump));
  if (!(c.prior > 0.0 && c.prior < 1.0))
    throw ConfigError("prior: rho must lie in (0,1), got " + format_double(c.prior));
  if (c.g && !(*c.g > 0.0 && std::isfinite(*c.g)))
    throw ConfigError("g: must be positive, got " + format_double(*c.g));
  if (!(c.ebic_gamma >= 0.0 && std::isfinite(c.ebic_gamma)))
    throw ConfigError("ebic-gamma: must be non-negative, got " + format_double(c.ebic_gamma));
  if (c.checkpoint < 1) throw ConfigError("checkpoint: must be at least 1");
  if (c.out.empty()) throw ConfigError("out: output directory must not be empty");
  if (c.sampler == SamplerChoice::Mh && c.eps.rfind("constant:", 0) != 0)
    throw ConfigError("eps: the mh sampler needs a constant schedule");
  // Table files are resolved at run time; everything else is checked here.
  if (c.eps.rfind("table:", 0) != 0) {
    try {
      parse_schedule(c.eps);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("eps: ") + e.what());
    }
  } else if (c.eps.size() == 6) {
    throw ConfigError("eps: table schedule needs a path");
  }
}

std::string serialize(const RunConfig& c) {
  std::ostringstream os;
  os << "model = " << quoted(model_name(c.model)) << '\n'
     << "data = " << quoted(c.data) << '\n'
     << "truth = " << quoted(c.truth) << '\n'
     << "toy-k = " << c.toy_k << '\n'
     << "sampler = " << quoted(sampler_name(c.sampler)) << '\n'
     << "eps = " << quoted(c.eps) << '\n'
     << "iters = " << c.iters << '\n'
     << "seed = " << c.seed << '\n'
     << "burn-in = " << format_double(c.burn_in) << '\n'
     << "max-jump = " << format_double(c.max_jump) << '\n'
     << "max-jump-iters = " << c.max_jump_iters << '\n'
     << "prior = " << format_double(c.prior) << '\n'
     << "g = " << quoted(c.g ? format_double(*c.g) : "n") << '\n'
     << "ebic-gamma = " << format_double(c.ebic_gamma) << '\n'
     << "out = " << quoted(c.out) << '\n'
     << "checkpoint = " << c.checkpoint << '\n';
  return os.str();
}

EpsilonSchedule parse_schedule_spec(const std::string& spec, const std::filesystem::path& base_dir) {
  if (spec.rfind("table:", 0) != 0) return parse_schedule(spec);
  std::filesystem::path path = spec.substr(6);
  if (path.empty()) throw ConfigError("eps: table schedule needs a path");
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  const LoadedMatrix m = load_matrix_csv(path, MatrixKind::Real);
  std::vector<double> values(m.values.data(), m.values.data() + m.values.size());
  if (m.values.cols() > 1) {
    values.clear();
    for (Eigen::Index r = 0; r < m.values.rows(); ++r)
      for (Eigen::Index col = 0; col < m.values.cols(); ++col) values.push_back(m.values(r, col));
  }
  return EpsilonSchedule::table(std::move(values));
}

std::optional<MaxJumpCap> cap_of(const RunConfig& c) {
  if (c.max_jump >= 1.0) return std::nullopt;
  return MaxJumpCap{c.max_jump, c.max_jump_iters};
}

}  // namespace mjmcmc::io
