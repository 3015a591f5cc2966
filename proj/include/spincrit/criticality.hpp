#pragma once

// Parameter sweeps of the local quantum uncertainty, their derivatives, and
// the separation of quantum phase transitions from kinks caused by the
// minimizing observable jumping between branches.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spincrit/correlators.hpp"
#include "spincrit/numerics.hpp"
#include "spincrit/temperature.hpp"
#include "spincrit/xyt_correlations.hpp"

namespace spincrit::criticality {

/// Every physical parameter of a single evaluation. N and alpha are used by
/// Model::xyt only; quad_tol by Model::xy only.
struct ModelPoint {
  Model model = Model::xy;
  double gamma = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  int N = 400;
  Temperature temperature = Temperature::zero();
  int n = 1;
  xyt::ModeConvention mode_convention = xyt::ModeConvention::symmetric;
  double quad_tol = 1e-10;

  void validate() const;
};

struct PointValue {
  CorrelatorSet correlators;
  double u = 0.0;
};

/// Correlators of sites (0, n) and the LQU of their two-site state.
PointValue evaluate_point(const ModelPoint& p);

/// A computation failed at the given coordinates, e.g. {"lambda", 1.0}.
class PointFailure : public std::runtime_error {
 public:
  PointFailure(const std::string& what, std::vector<std::pair<std::string, double>> coordinates)
      : std::runtime_error(what), coordinates_(std::move(coordinates)) {}

  const std::vector<std::pair<std::string, double>>& coordinates() const noexcept { return coordinates_; }

 private:
  std::vector<std::pair<std::string, double>> coordinates_;
};

enum class SweepAxis { lambda, alpha };

const char* axis_name(SweepAxis a);

struct SweepSpec {
  ModelPoint base;  // the swept parameter's value here is ignored
  SweepAxis axis = SweepAxis::lambda;
  numerics::Grid1D grid{0.0, 2.5, 0.005};
  std::optional<double> prominence;

  /// Grid of at least 16 points; alpha sweeps need Model::xyt.
  void validate() const;
};

struct SweepRow {
  double axis_value = 0.0;
  CorrelatorSet correlators;
  double u = 0.0;
  double du = 0.0;
  std::array<double, 4> d_correlators{};  // d sig_z, d xx, d yy, d zz
};

/// One row per grid point, in grid order. Points are evaluated on up to
/// `workers` threads; the result does not depend on the count. The first
/// failing point (lowest grid index) is rethrown as PointFailure.
std::vector<SweepRow> sweep(const SweepSpec& spec, int workers = 1);

enum class Classification { qpt, branch_switch };

const char* classification_name(Classification c);

struct CriticalPoint {
  std::size_t index = 0;
  double location = 0.0;
  SweepAxis axis = SweepAxis::lambda;
  Classification classification = Classification::branch_switch;
  double peak_height = 0.0;
  numerics::PeakKind kind = numerics::PeakKind::maximum;
};

/// Samples within this many grid steps count as co-located.
inline constexpr std::size_t kColocationSteps = 2;

/// Peaks of |du|, each classified qpt when some |d_correlators| channel has a
/// peak within kColocationSteps, else branch_switch. `prominence` applies to
/// every series; by default each series uses 5 x its median magnitude (with
/// a floor of 1e-9 times its maximum so rounding noise never forms a peak).
/// Requires at least 16 rows.
std::vector<CriticalPoint> detect_critical_points(std::span<const SweepRow> rows,
                                                  std::optional<double> prominence = std::nullopt,
                                                  SweepAxis axis = SweepAxis::lambda);

enum class MapAxis { gamma, alpha };

const char* axis_name(MapAxis a);

struct PhaseMapSpec {
  ModelPoint base;
  numerics::Grid1D lambda_grid{0.0, 2.5, 0.005};
  /// gamma for Model::xy, alpha for Model::xyt.
  numerics::Grid1D outer_grid{0.0, 1.0, 0.05};

  /// Each grid needs at least 2 points; with 2 the derivative is one-sided.
  void validate() const;
  MapAxis outer_axis() const noexcept { return base.model == Model::xy ? MapAxis::gamma : MapAxis::alpha; }
};

struct MapCell {
  double outer = 0.0;
  double lambda = 0.0;
  double u = 0.0;
  double du = 0.0;  // along lambda
};

/// Row-major over outer x lambda.
struct PhaseMap {
  MapAxis outer_axis = MapAxis::gamma;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MapCell> cells;

  const MapCell& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

PhaseMap phase_map(const PhaseMapSpec& spec, int workers = 1);

struct GapLines {
  std::vector<std::pair<double, double>> upper;  // (alpha, 1 + 2 alpha)
  std::vector<std::pair<double, double>> lower;  // (alpha, 2 alpha - 1)
};

/// Lines where the XYT dispersion closes its gap at x = 0 and x = pi.
GapLines gap_closing_lines(const numerics::Grid1D& alpha);

}  // namespace spincrit::criticality
