#include "spincrit/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/lqu.hpp"
#include "spincrit/parallel.hpp"
#include "spincrit/state_builder.hpp"
#include "spincrit/xy_correlations.hpp"

namespace spincrit::criticality {

namespace {

constexpr std::size_t kMinSweepPoints = 16;

xy::XYParams xy_params(const ModelPoint& p) {
  return {.gamma = p.gamma, .lambda = p.lambda, .temperature = p.temperature, .quad_tol = p.quad_tol};
}

xyt::XYTParams xyt_params(const ModelPoint& p) {
  return {.gamma = p.gamma,
          .lambda = p.lambda,
          .alpha = p.alpha,
          .N = p.N,
          .temperature = p.temperature,
          .mode_convention = p.mode_convention};
}

// Runs fn, rethrowing computation failures as PointFailure at `coords`.
// Precondition violations pass through unchanged.
template <class Fn>
auto at_coordinates(std::vector<std::pair<std::string, double>> coords, Fn&& fn) {
  try {
    return fn();
  } catch (const PointFailure&) {
    throw;
  } catch (const ArgumentError&) {
    throw;
  } catch (const std::exception& e) {
    std::string where;
    for (const auto& [name, value] : coords) {
      where += fmt::format("{}{}={:.17g}", where.empty() ? "" : ", ", name, value);
    }
    throw PointFailure(fmt::format("{} at {}", e.what(), where), std::move(coords));
  }
}

double effective_prominence(std::span<const double> ys, std::optional<double> prominence) {
  if (prominence) return *prominence;
  double peak = 0.0;
  for (double y : ys) peak = std::max(peak, std::abs(y));
  return std::max(numerics::default_prominence(ys), 1e-9 * peak);
}

}  // namespace

void ModelPoint::validate() const {
  if (n < 1) throw ArgumentError(fmt::format("separation n = {} must be >= 1", n));
  if (model == Model::xy) {
    xy_params(*this).validate();
  } else {
    xyt_params(*this).validate();
  }
}

PointValue evaluate_point(const ModelPoint& p) {
  p.validate();
  PointValue out;
  out.correlators = p.model == Model::xy ? xy::xy_correlators(p.n, xy_params(p))
                                         : xyt::xyt_correlators(p.n, xyt_params(p));
  out.u = lqu::lqu(build_rho(out.correlators)).u;
  return out;
}

const char* axis_name(SweepAxis a) { return a == SweepAxis::lambda ? "lambda" : "alpha"; }

const char* axis_name(MapAxis a) { return a == MapAxis::gamma ? "gamma" : "alpha"; }

const char* classification_name(Classification c) {
  return c == Classification::qpt ? "qpt" : "branch_switch";
}

void SweepSpec::validate() const {
  if (grid.size() < kMinSweepPoints) {
    throw ArgumentError(fmt::format("sweep: axis has {} points, need at least {}", grid.size(), kMinSweepPoints));
  }
  if (axis == SweepAxis::alpha && base.model != Model::xyt) {
    throw ArgumentError("sweep: an alpha axis needs the xyt model");
  }
  if (prominence && !(*prominence >= 0.0)) throw ArgumentError("sweep: prominence must be >= 0");
  if (base.n < 1) throw ArgumentError(fmt::format("separation n = {} must be >= 1", base.n));
}

std::vector<SweepRow> sweep(const SweepSpec& spec, int workers) {
  spec.validate();
  const auto values = spec.grid.values();
  const char* name = axis_name(spec.axis);

  auto points = parallel_map(values.size(), workers, [&](std::size_t i) {
    ModelPoint p = spec.base;
    (spec.axis == SweepAxis::lambda ? p.lambda : p.alpha) = values[i];
    return at_coordinates({{name, values[i]}}, [&] { return evaluate_point(p); });
  });

  const std::size_t n = values.size();
  std::vector<double> series(n);
  const auto derivative_of = [&](auto get) {
    for (std::size_t i = 0; i < n; ++i) series[i] = get(points[i]);
    return numerics::central_derivative(spec.grid, series);
  };
  const auto du = derivative_of([](const PointValue& v) { return v.u; });
  std::array<std::vector<double>, 4> dc;
  for (std::size_t c = 0; c < 4; ++c) {
    dc[c] = derivative_of([c](const PointValue& v) { return v.correlators.values()[c]; });
  }

  std::vector<SweepRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].axis_value = values[i];
    rows[i].correlators = points[i].correlators;
    rows[i].u = points[i].u;
    rows[i].du = du[i];
    for (std::size_t c = 0; c < 4; ++c) rows[i].d_correlators[c] = dc[c][i];
  }
  return rows;
}

std::vector<CriticalPoint> detect_critical_points(std::span<const SweepRow> rows, std::optional<double> prominence,
                                                  SweepAxis axis) {
  if (rows.size() < kMinSweepPoints) {
    throw ArgumentError(fmt::format("detect_critical_points: {} rows, need at least {}", rows.size(), kMinSweepPoints));
  }
  if (prominence && !(*prominence >= 0.0)) throw ArgumentError("detect_critical_points: prominence must be >= 0");

  std::vector<double> xs(rows.size());
  std::transform(rows.begin(), rows.end(), xs.begin(), [](const SweepRow& r) { return r.axis_value; });
  const auto grid = numerics::Grid1D::from_values(xs);

  std::vector<double> series(rows.size());
  const auto peaks_of = [&](auto get) {
    std::transform(rows.begin(), rows.end(), series.begin(), get);
    return numerics::find_peaks(grid, series, effective_prominence(series, prominence));
  };

  std::vector<std::size_t> channel_peaks;
  for (std::size_t c = 0; c < 4; ++c) {
    for (const auto& pk : peaks_of([c](const SweepRow& r) { return r.d_correlators[c]; })) {
      channel_peaks.push_back(pk.index);
    }
  }

  std::vector<CriticalPoint> out;
  for (const auto& pk : peaks_of([](const SweepRow& r) { return r.du; })) {
    const bool colocated = std::any_of(channel_peaks.begin(), channel_peaks.end(), [&](std::size_t k) {
      const std::size_t d = k > pk.index ? k - pk.index : pk.index - k;
      return d <= kColocationSteps;
    });
    out.push_back({pk.index, pk.location, axis, colocated ? Classification::qpt : Classification::branch_switch,
                   pk.height, pk.kind});
  }
  return out;
}

void PhaseMapSpec::validate() const {
  if (lambda_grid.size() < 2 || outer_grid.size() < 2) throw ArgumentError("phase_map: each grid needs >= 2 points");
  if (base.n < 1) throw ArgumentError(fmt::format("separation n = {} must be >= 1", base.n));
}

PhaseMap phase_map(const PhaseMapSpec& spec, int workers) {
  spec.validate();
  const MapAxis outer_axis = spec.outer_axis();
  const auto outer = spec.outer_grid.values();
  const auto lambdas = spec.lambda_grid.values();
  const std::size_t rows = outer.size();
  const std::size_t cols = lambdas.size();

  auto u = parallel_map(rows * cols, workers, [&](std::size_t idx) {
    ModelPoint p = spec.base;
    const double o = outer[idx / cols];
    const double l = lambdas[idx % cols];
    (outer_axis == MapAxis::gamma ? p.gamma : p.alpha) = o;
    p.lambda = l;
    return at_coordinates({{axis_name(outer_axis), o}, {"lambda", l}}, [&] { return evaluate_point(p).u; });
  });

  PhaseMap map{outer_axis, rows, cols, std::vector<MapCell>(rows * cols)};
  for (std::size_t r = 0; r < rows; ++r) {
    const std::span<const double> row(u.data() + r * cols, cols);
    const auto du = cols >= 3 ? numerics::central_derivative(spec.lambda_grid, row)
                              : std::vector<double>(2, (row[1] - row[0]) / spec.lambda_grid.step());
    for (std::size_t c = 0; c < cols; ++c) map.cells[r * cols + c] = {outer[r], lambdas[c], row[c], du[c]};
  }
  return map;
}

GapLines gap_closing_lines(const numerics::Grid1D& alpha) {
  GapLines lines;
  for (double a : alpha.values()) {
    lines.upper.emplace_back(a, 1.0 + 2.0 * a);
    lines.lower.emplace_back(a, 2.0 * a - 1.0);
  }
  return lines;
}

}  // namespace spincrit::criticality
