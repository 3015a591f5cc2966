#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string_view>
#include <variant>

#include <fmt/format.h>
#include <json.hpp>

#include "spincrit/cli.hpp"
#include "spincrit/criticality.hpp"
#include "spincrit/ed_oracle.hpp"
#include "spincrit/errors.hpp"
#include "spincrit/lqu.hpp"
#include "spincrit/parallel.hpp"
#include "spincrit/random_states.hpp"
#include "spincrit/version.hpp"
#include "spincrit/xy_correlations.hpp"

namespace spincrit::cli {

namespace {

using json = nlohmann::ordered_json;
using criticality::ModelPoint;

// Brute-force grid and acceptance bound of the LQU oracle.
constexpr int kOracleGrid = 256;
constexpr double kOracleTolerance = 1e-6;

/// Empty string means "no value" (blank CSV cell, JSON null).
using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

class ComputationFailure : public std::runtime_error {
 public:
  ComputationFailure(const std::string& what, std::vector<std::pair<std::string, double>> coords = {})
      : std::runtime_error(what), coordinates(std::move(coords)) {}
  std::vector<std::pair<std::string, double>> coordinates;
};

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt::format("{:.17g}", *d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  const auto& s = std::get<std::string>(c);
  return s.empty() ? json(nullptr) : json(s);
}

std::string render(const RunConfig& config, const Table& t) {
  const auto header = describe(config);
  if (config.format == Format::csv) {
    std::string out;
    for (const auto& [k, v] : header) out += fmt::format("# {} = {}\n", k, v);
    out += fmt::format("{}\n", fmt::join(t.columns, ","));
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_cell(row[i]);
      }
      out += '\n';
    }
    return out;
  }
  json doc;
  json& h = doc["header"];
  for (const auto& [k, v] : header) h[k] = v;
  json& data = doc["data"] = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_cell(row[i]);
    data.push_back(std::move(r));
  }
  return doc.dump(1) + "\n";
}

ModelPoint base_point(const RunConfig& c) {
  ModelPoint p;
  p.model = c.model;
  p.gamma = c.gamma.start;
  p.lambda = c.lambda.start;
  p.alpha = c.alpha.start;
  p.N = c.N;
  p.temperature = c.temperature;
  p.n = c.n;
  p.mode_convention = c.mode_convention;
  p.quad_tol = c.quad_tol;
  return p;
}

void require_scalar(const ParamValue& v, const char* name, const char* command) {
  if (v.is_range()) throw UsageError(fmt::format("{}: --{} must be a scalar", command, name));
}

Table run_point(const RunConfig& c) {
  require_scalar(c.gamma, "gamma", "point");
  require_scalar(c.lambda, "lambda", "point");
  require_scalar(c.alpha, "alpha", "point");
  const ModelPoint p = base_point(c);
  criticality::PointValue v;
  try {
    v = criticality::evaluate_point(p);
  } catch (const ArgumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComputationFailure(e.what(), {{"gamma", p.gamma}, {"lambda", p.lambda}, {"alpha", p.alpha}});
  }
  const auto& k = v.correlators;
  return {{"gamma", "lambda", "alpha", "sig_z", "xx", "yy", "zz", "u"},
          {{p.gamma, p.lambda, p.alpha, k.sig_z, k.xx, k.yy, k.zz, v.u}}};
}

Table run_sweep(const RunConfig& c) {
  require_scalar(c.gamma, "gamma", "sweep");
  criticality::SweepSpec spec;
  spec.base = base_point(c);
  spec.prominence = c.prominence;
  if (c.lambda.is_range() == c.alpha.is_range()) {
    throw UsageError("sweep: exactly one of --lambda and --alpha must be a start:stop:step range");
  }
  spec.axis = c.lambda.is_range() ? criticality::SweepAxis::lambda : criticality::SweepAxis::alpha;
  spec.grid = (c.lambda.is_range() ? c.lambda : c.alpha).grid();

  const auto rows = criticality::sweep(spec, c.workers);
  std::vector<std::string> labels(rows.size());
  for (const auto& cp : criticality::detect_critical_points(rows, c.prominence, spec.axis)) {
    labels[cp.index] = criticality::classification_name(cp.classification);
  }

  Table t{{criticality::axis_name(spec.axis), "sig_z", "xx", "yy", "zz", "u", "du", "d_sig_z", "d_xx", "d_yy",
           "d_zz", "classification"},
          {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.rows.push_back({r.axis_value, r.correlators.sig_z, r.correlators.xx, r.correlators.yy, r.correlators.zz, r.u,
                      r.du, r.d_correlators[0], r.d_correlators[1], r.d_correlators[2], r.d_correlators[3],
                      labels[i]});
  }
  return t;
}

Table run_map(const RunConfig& c) {
  criticality::PhaseMapSpec spec;
  spec.base = base_point(c);
  const ParamValue& outer = c.model == Model::xy ? c.gamma : c.alpha;
  const char* outer_name = c.model == Model::xy ? "gamma" : "alpha";
  if (!c.lambda.is_range() || !outer.is_range()) {
    throw UsageError(fmt::format("map: --lambda and --{} must be start:stop:step ranges", outer_name));
  }
  if (c.model == Model::xyt) require_scalar(c.gamma, "gamma", "map");
  spec.lambda_grid = c.lambda.grid();
  spec.outer_grid = outer.grid();

  const auto map = criticality::phase_map(spec, c.workers);
  Table t{{outer_name, "lambda", "u", "du"}, {}};
  for (const auto& cell : map.cells) t.rows.push_back({cell.outer, cell.lambda, cell.u, cell.du});
  return t;
}

Table run_lines(const RunConfig& c) {
  const auto lines = criticality::gap_closing_lines(c.alpha.grid());
  Table t{{"alpha", "lambda_upper", "lambda_lower"}, {}};
  for (std::size_t i = 0; i < lines.upper.size(); ++i) {
    t.rows.push_back({lines.upper[i].first, lines.upper[i].second, lines.lower[i].second});
  }
  return t;
}

Table run_oracle(const RunConfig& c) {
  Table t{{"check", "index", "value", "reference", "abs_diff"}, {}};

  // States are drawn serially so the sample set does not depend on workers.
  std::mt19937_64 rng(c.seed);
  std::vector<linalg::HermitianMatrix> states;
  std::vector<std::string> family;
  for (int i = 0; i < c.lqu_random; ++i) {
    states.push_back(states::random_x_state(rng));
    family.emplace_back("lqu_x_state");
  }
  for (int i = 0; i < c.lqu_random; ++i) {
    states.push_back(states::random_mixed_state(rng));
    family.emplace_back("lqu_general");
  }
  const auto pairs = parallel_map(states.size(), c.workers, [&](std::size_t i) {
    return std::pair{lqu::lqu(states[i]).u, lqu::lqu_bruteforce(states[i], kOracleGrid, kOracleGrid)};
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double diff = std::abs(pairs[i].first - pairs[i].second);
    worst = std::max(worst, diff);
    const auto index = static_cast<long long>(i % static_cast<std::size_t>(std::max(c.lqu_random, 1)));
    t.rows.push_back({family[i], index, pairs[i].first, pairs[i].second, diff});
  }
  if (!states.empty()) {
    t.rows.push_back({std::string("lqu_max_abs_diff"), static_cast<long long>(states.size()), worst, kOracleTolerance,
                      std::string()});
  }

  for (int N : c.ed_sizes) {
    if (N > ed::kMaxSites || 2 * c.n >= N) {
      throw UsageError(fmt::format("oracle: ED size {} must satisfy 2n < N <= {}", N, ed::kMaxSites));
    }
    require_scalar(c.gamma, "gamma", "oracle");
    require_scalar(c.lambda, "lambda", "oracle");
    require_scalar(c.alpha, "alpha", "oracle");
    CorrelatorSet analytic;
    xyt::XYTParams ring;
    if (c.model == Model::xy) {
      const xy::XYParams p{c.gamma.start, c.lambda.start, c.temperature, c.quad_tol};
      analytic = xy::xy_correlators(c.n, p);
      ring = ed::ring_params_for(p, N);
    } else {
      const xyt::XYTParams p{c.gamma.start, c.lambda.start, c.alpha.start, N, c.temperature, c.mode_convention};
      analytic = xyt::xyt_correlators(c.n, p);
      ring = ed::ring_params_for(p);
    }
    const auto h = ed::build_hamiltonian(c.model, ring);
    const auto exact = ed::ed_correlators(ed::thermal_state(h, ring.temperature), N, 0, c.n);
    const std::array<const char*, 4> names{"ed_sig_z", "ed_xx", "ed_yy", "ed_zz"};
    for (std::size_t k = 0; k < 4; ++k) {
      const double a = analytic.values()[k];
      const double e = exact.values()[k];
      t.rows.push_back({std::string(names[k]), static_cast<long long>(N), a, e, std::abs(a - e)});
    }
  }

  if (worst > kOracleTolerance) {
    throw ComputationFailure(
        fmt::format("LQU closed form and brute force differ by {:.3g} > {:.0e}", worst, kOracleTolerance));
  }
  return t;
}

Table execute(const RunConfig& c) {
  if (c.workers < 1) throw UsageError("--workers must be >= 1");
  switch (c.command) {
    case Command::point: return run_point(c);
    case Command::sweep: return run_sweep(c);
    case Command::map: return run_map(c);
    case Command::oracle: return run_oracle(c);
    case Command::lines: return run_lines(c);
  }
  throw UsageError("unknown command");
}

void error_record(std::ostream& err, std::string_view kind, std::string_view message,
                  const std::vector<std::pair<std::string, double>>& coords = {}) {
  json rec;
  rec["error"]["kind"] = kind;
  rec["error"]["message"] = message;
  json& at = rec["error"]["coordinates"] = json::object();
  for (const auto& [name, value] : coords) at[name] = value;
  err << rec.dump() << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = render(config, execute(config));
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what());
    return kExitUsage;
  } catch (const ArgumentError& e) {
    error_record(err, "usage", e.what());
    return kExitUsage;
  } catch (const criticality::PointFailure& e) {
    error_record(err, "computation", e.what(), e.coordinates());
    return kExitFailure;
  } catch (const ComputationFailure& e) {
    error_record(err, "computation", e.what(), e.coordinates);
    return kExitFailure;
  } catch (const std::exception& e) {
    error_record(err, "computation", e.what());
    return kExitFailure;
  }

  if (config.output == "-") {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    error_record(err, "usage", fmt::format("cannot open '{}' for writing", config.output));
    return kExitUsage;
  }
  file << text;
  if (!file.flush()) {
    error_record(err, "computation", fmt::format("failed writing '{}'", config.output));
    return kExitFailure;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view a(argv[i]);
    if (a == "-h" || a == "--help") {
      out << help_text();
      return kExitOk;
    }
    if (a == "--version") {
      out << "spincrit " << kVersion << '\n';
      return kExitOk;
    }
  }
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what());
    return kExitUsage;
  } catch (const ArgumentError& e) {
    error_record(err, "usage", e.what());
    return kExitUsage;
  }
  return run(config, out, err);
}

std::string data_section(std::string_view output, Format format) {
  if (format == Format::json) return json::parse(output).at("data").dump();
  std::string data;
  std::size_t pos = 0;
  while (pos < output.size()) {
    std::size_t end = output.find('\n', pos);
    if (end == std::string_view::npos) end = output.size();
    const std::string_view line = output.substr(pos, end - pos);
    if (line.empty() || line.front() != '#') {
      data.append(line);
      data += '\n';
    }
    pos = end + 1;
  }
  return data;
}

}  // namespace spincrit::cli
