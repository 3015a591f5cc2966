#pragma once

// Command-line front end: option parsing, the resolved run configuration and
// the writers for CSV and JSON output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spincrit/correlators.hpp"
#include "spincrit/numerics.hpp"
#include "spincrit/temperature.hpp"
#include "spincrit/xyt_correlations.hpp"

namespace spincrit::cli {

/// Bad flags, unparseable values or a config file that cannot be read.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Command { point, sweep, map, oracle, lines };
enum class Format { csv, json };

/// A scalar or a start:stop:step range.
struct ParamValue {
  double start = 0.0;
  std::optional<double> stop;
  std::optional<double> step;

  static ParamValue scalar(double v) { return {v, std::nullopt, std::nullopt}; }
  static ParamValue range(double start, double stop, double step) { return {start, stop, step}; }
  /// Accepts "x" or "start:stop:step"; throws UsageError otherwise.
  static ParamValue parse(std::string_view text);

  bool is_range() const noexcept { return stop.has_value(); }
  numerics::Grid1D grid() const;
  std::string to_string() const;
};

struct RunConfig {
  Command command = Command::point;
  Model model = Model::xy;
  ParamValue gamma = ParamValue::scalar(0.5);
  ParamValue lambda = ParamValue::scalar(1.0);
  ParamValue alpha = ParamValue::scalar(0.0);
  int N = 400;
  int n = 1;
  Temperature temperature = Temperature::zero();
  double quad_tol = 1e-10;
  std::optional<double> prominence;
  xyt::ModeConvention mode_convention = xyt::ModeConvention::symmetric;
  std::uint64_t seed = 7;
  int lqu_random = 100;
  std::vector<int> ed_sizes;
  std::string output = "-";
  Format format = Format::csv;
  int workers = 1;
};

/// Defaults for the parameters whose natural value depends on the command
/// and model (the axis ranges).
RunConfig defaults_for(Command command, Model model);

/// Parses argv (argv[0] is the program name). Flags override values from
/// --config, which override defaults_for(). --workers falls back to the
/// SPINCRIT_WORKERS environment variable. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// Usage text for --help.
std::string help_text();

/// Executes the command and writes its output to config.output ("-" means
/// `out`). Returns an exit code; failures are reported to `err` as a JSON
/// error record.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The resolved configuration as ordered key/value pairs, as written in the
/// output header.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config);

/// The output without its header: CSV lines not starting with '#', or the
/// re-serialized "data" member of a JSON document.
std::string data_section(std::string_view output, Format format);

const char* command_name(Command c);
const char* model_name(Model m);

}  // namespace spincrit::cli
