#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "spincrit/cli.hpp"
#include "spincrit/errors.hpp"
#include "spincrit/version.hpp"

namespace spincrit::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw UsageError(fmt::format("{}: '{}' is not a finite number", what, text));
  }
  return v;
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

template <class Enum>
Enum lookup(const std::map<std::string, Enum>& names, const std::string& text, std::string_view what) {
  const auto it = names.find(text);
  if (it == names.end()) throw UsageError(fmt::format("{}: unknown value '{}'", what, text));
  return it->second;
}

const std::map<std::string, Command> kCommands{{"point", Command::point},
                                               {"sweep", Command::sweep},
                                               {"map", Command::map},
                                               {"oracle", Command::oracle},
                                               {"lines", Command::lines}};
const std::map<std::string, Model> kModels{{"xy", Model::xy}, {"xyt", Model::xyt}};
const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, xyt::ModeConvention> kConventions{{"paper", xyt::ModeConvention::paper},
                                                              {"symmetric", xyt::ModeConvention::symmetric}};

int positive_int(std::string_view text, std::string_view what) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v < 1) {
    throw UsageError(fmt::format("{}: '{}' is not a positive integer", what, text));
  }
  return v;
}

// Every option is read as text so that range syntax, enum names and the
// "given or not" state survive CLI11's config-file merge unchanged.
struct RawOptions {
  std::string command;
  std::string model;
  std::string gamma, lambda, alpha;
  std::string N, n;
  bool zero_temp = false;
  std::string beta;
  std::string quad_tol, prominence, mode_convention, seed;
  std::string lqu_random, ed_sizes;
  std::string output, format, workers;
};

void define(CLI::App& app, RawOptions& raw) {
  app.set_config("--config", "", "key=value file ('#' comments); flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("command", raw.command, "point | sweep | map | oracle | lines")->required();
  app.add_option("--model", raw.model, "xy | xyt (default xy)");
  app.add_option("--gamma", raw.gamma, "anisotropy, scalar or start:stop:step (map, xy)");
  app.add_option("--lambda", raw.lambda, "field parameter, scalar or start:stop:step");
  app.add_option("--alpha", raw.alpha, "three-spin coupling, scalar or start:stop:step");
  app.add_option("--N", raw.N, "ring length for xyt (default 400)");
  app.add_option("--n", raw.n, "site separation (default 1)");
  auto* zero = app.add_flag("--zero-temp", raw.zero_temp, "zero temperature (default)");
  auto* beta = app.add_option("--beta", raw.beta, "inverse temperature");
  zero->excludes(beta);
  app.add_option("--quad-tol", raw.quad_tol, "absolute quadrature tolerance (default 1e-10)");
  app.add_option("--prominence", raw.prominence, "peak prominence (default 5 x median per series)");
  app.add_option("--mode-convention", raw.mode_convention, "paper | symmetric (default symmetric)");
  app.add_option("--seed", raw.seed, "seed for random oracle states (default 7)");
  app.add_option("--lqu-random", raw.lqu_random, "oracle: random states per family (default 100)");
  app.add_option("--ed-sizes", raw.ed_sizes, "oracle: comma-separated ring sizes for ED");
  app.add_option("--output", raw.output, "output path, '-' for stdout (default)");
  app.add_option("--format", raw.format, "csv | json (default csv)");
  app.add_option("--workers", raw.workers, "worker threads (default $SPINCRIT_WORKERS or 1)");
}

bool given(const CLI::App& app, const char* name) { return app.count(name) > 0; }

}  // namespace

ParamValue ParamValue::parse(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return scalar(parse_double(text, "value"));
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw UsageError(fmt::format("range '{}' must be start:stop:step", text));
  }
  const ParamValue v = range(parse_double(text.substr(0, first), "range start"),
                             parse_double(text.substr(first + 1, second - first - 1), "range stop"),
                             parse_double(text.substr(second + 1), "range step"));
  if (!(*v.step > 0.0) || *v.stop < v.start) throw UsageError(fmt::format("range '{}' is empty", text));
  return v;
}

numerics::Grid1D ParamValue::grid() const {
  if (!is_range()) return numerics::Grid1D(start, start, 1.0);
  return numerics::Grid1D(start, *stop, *step);
}

std::string ParamValue::to_string() const {
  if (!is_range()) return number(start);
  return fmt::format("{}:{}:{}", number(start), number(*stop), number(*step));
}

const char* command_name(Command c) {
  switch (c) {
    case Command::point: return "point";
    case Command::sweep: return "sweep";
    case Command::map: return "map";
    case Command::oracle: return "oracle";
    case Command::lines: return "lines";
  }
  return "?";
}

const char* model_name(Model m) { return m == Model::xy ? "xy" : "xyt"; }

RunConfig defaults_for(Command command, Model model) {
  RunConfig c;
  c.command = command;
  c.model = model;
  const bool xy = model == Model::xy;
  switch (command) {
    case Command::point:
    case Command::oracle:
      c.lambda = ParamValue::scalar(1.0);
      c.alpha = ParamValue::scalar(xy ? 0.0 : 0.5);
      break;
    case Command::sweep:
      c.lambda = xy ? ParamValue::range(0.0, 2.5, 0.005) : ParamValue::range(-1.5, 2.5, 0.005);
      c.alpha = ParamValue::scalar(xy ? 0.0 : 0.5);
      break;
    case Command::map:
      c.lambda = xy ? ParamValue::range(0.0, 2.5, 0.005) : ParamValue::range(-1.5, 2.5, 0.005);
      if (xy) {
        c.gamma = ParamValue::range(0.0, 1.0, 0.05);
      } else {
        c.alpha = ParamValue::range(0.0, 1.0, 0.05);
      }
      break;
    case Command::lines:
      c.alpha = ParamValue::range(0.0, 1.5, 0.05);
      break;
  }
  if (const char* env = std::getenv("SPINCRIT_WORKERS"); env != nullptr && *env != '\0') {
    c.workers = positive_int(env, "SPINCRIT_WORKERS");
  }
  return c;
}

std::string help_text() {
  CLI::App app{"spincrit: local quantum uncertainty across spin-chain phase transitions", "spincrit"};
  RawOptions raw;
  define(app, raw);
  return app.help();
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"spincrit: local quantum uncertainty across spin-chain phase transitions", "spincrit"};
  RawOptions raw;
  define(app, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const Command command = lookup(kCommands, raw.command, "command");
  const Model model = given(app, "--model") ? lookup(kModels, raw.model, "--model") : Model::xy;
  RunConfig c = defaults_for(command, model);

  if (given(app, "--gamma")) c.gamma = ParamValue::parse(raw.gamma);
  if (given(app, "--lambda")) c.lambda = ParamValue::parse(raw.lambda);
  if (given(app, "--alpha")) c.alpha = ParamValue::parse(raw.alpha);
  if (given(app, "--N")) c.N = positive_int(raw.N, "--N");
  if (given(app, "--n")) c.n = positive_int(raw.n, "--n");
  if (given(app, "--beta")) {
    const double beta = parse_double(raw.beta, "--beta");
    if (!(beta > 0.0)) throw UsageError("--beta must be > 0");
    c.temperature = Temperature::inverse(beta);
  }
  if (given(app, "--quad-tol")) {
    c.quad_tol = parse_double(raw.quad_tol, "--quad-tol");
    if (!(c.quad_tol > 0.0)) throw UsageError("--quad-tol must be > 0");
  }
  if (given(app, "--prominence")) {
    c.prominence = parse_double(raw.prominence, "--prominence");
    if (!(*c.prominence >= 0.0)) throw UsageError("--prominence must be >= 0");
  }
  if (given(app, "--mode-convention")) {
    c.mode_convention = lookup(kConventions, raw.mode_convention, "--mode-convention");
  }
  if (given(app, "--seed")) {
    std::uint64_t seed = 0;
    const char* end = raw.seed.data() + raw.seed.size();
    const auto [ptr, ec] = std::from_chars(raw.seed.data(), end, seed);
    if (ec != std::errc{} || ptr != end) throw UsageError(fmt::format("--seed: '{}' is not an integer", raw.seed));
    c.seed = seed;
  }
  if (given(app, "--lqu-random")) {
    if (raw.lqu_random == "0") {
      c.lqu_random = 0;
    } else {
      c.lqu_random = positive_int(raw.lqu_random, "--lqu-random");
    }
  }
  if (given(app, "--ed-sizes")) {
    std::stringstream ss(raw.ed_sizes);
    for (std::string item; std::getline(ss, item, ',');) c.ed_sizes.push_back(positive_int(item, "--ed-sizes"));
  }
  if (given(app, "--output")) c.output = raw.output;
  if (given(app, "--format")) c.format = lookup(kFormats, raw.format, "--format");
  if (given(app, "--workers")) c.workers = positive_int(raw.workers, "--workers");
  return c;
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> kv{
      {"version", std::string(kVersion)},
      {"command", command_name(c.command)},
      {"model", model_name(c.model)},
      {"gamma", c.gamma.to_string()},
      {"lambda", c.lambda.to_string()},
      {"alpha", c.alpha.to_string()},
      {"N", std::to_string(c.N)},
      {"n", std::to_string(c.n)},
      {"temperature", c.temperature.is_zero() ? "zero" : fmt::format("beta={}", number(c.temperature.beta()))},
      {"quad_tol", number(c.quad_tol)},
      {"prominence", c.prominence ? number(*c.prominence) : "auto"},
      {"mode_convention", c.mode_convention == xyt::ModeConvention::paper ? "paper" : "symmetric"},
      {"seed", std::to_string(c.seed)},
      {"lqu_random", std::to_string(c.lqu_random)},
      {"ed_sizes", c.ed_sizes.empty() ? "none" : fmt::format("{}", fmt::join(c.ed_sizes, ","))},
      {"format", c.format == Format::csv ? "csv" : "json"},
      {"workers", std::to_string(c.workers)},
  };
  return kv;
}

}  // namespace spincrit::cli
