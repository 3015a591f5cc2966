#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "spincrit/criticality.hpp"
#include "spincrit/errors.hpp"
#include "spincrit/parallel.hpp"

using namespace spincrit;
using namespace spincrit::criticality;
using numerics::Grid1D;

namespace {

SweepSpec xy_sweep(double gamma, Grid1D grid) {
  SweepSpec s;
  s.base.model = Model::xy;
  s.base.gamma = gamma;
  s.grid = std::move(grid);
  return s;
}

SweepSpec xyt_sweep(double gamma, double alpha, int N, Grid1D grid) {
  SweepSpec s;
  s.base.model = Model::xyt;
  s.base.gamma = gamma;
  s.base.alpha = alpha;
  s.base.N = N;
  s.grid = std::move(grid);
  return s;
}

std::vector<double> qpt_locations(const std::vector<CriticalPoint>& points) {
  std::vector<double> out;
  for (const auto& p : points) {
    if (p.classification == Classification::qpt) out.push_back(p.location);
  }
  return out;
}

double distance_to(const std::vector<double>& xs, double target) {
  double d = 1e9;
  for (double x : xs) d = std::min(d, std::abs(x - target));
  return d;
}

}  // namespace

TEST_CASE("parallel_map") {
  SUBCASE("results are in index order for any worker count") {
    for (int w : {1, 2, 3, 8}) {
      const auto out = parallel_map(100, w, [](std::size_t i) { return i * i; });
      REQUIRE(out.size() == 100);
      for (std::size_t i = 0; i < 100; ++i) CHECK(out[i] == i * i);
    }
  }
  SUBCASE("the lowest failing index is reported") {
    for (int w : {1, 4}) {
      try {
        parallel_map(50, w, [](std::size_t i) -> int {
          if (i == 17 || i == 31) throw std::runtime_error(std::to_string(i));
          return 0;
        });
        FAIL("expected a throw");
      } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "17");
      }
    }
  }
  SUBCASE("empty and invalid") {
    CHECK(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
    CHECK_THROWS_AS(parallel_map(3, 0, [](std::size_t) { return 1; }), ArgumentError);
  }
}

TEST_CASE("gap_closing_lines") {
  const auto lines = gap_closing_lines(Grid1D(0.0, 1.0, 0.5));
  REQUIRE(lines.upper.size() == 3);
  CHECK(lines.upper[0].second == 1.0);
  CHECK(lines.lower[0].second == -1.0);
  CHECK(lines.upper[1].second == 2.0);
  CHECK(lines.lower[1].second == 0.0);
  CHECK(lines.upper[2].second == 3.0);
  CHECK(lines.lower[2].second == 1.0);
}

TEST_CASE("evaluate_point") {
  ModelPoint p;
  p.model = Model::xy;
  p.gamma = 0.0;
  p.lambda = 0.01;
  CHECK(evaluate_point(p).u < 1e-3);
  p.lambda = 0.0;
  CHECK(evaluate_point(p).u == doctest::Approx(0.0));
  p.n = 0;
  CHECK_THROWS_AS(evaluate_point(p), ArgumentError);
}

TEST_CASE("sweep preconditions") {
  CHECK_THROWS_AS(sweep(xy_sweep(0.5, Grid1D(0.0, 1.0, 0.1))), ArgumentError);
  auto s = xy_sweep(0.5, Grid1D(0.0, 1.0, 0.05));
  s.axis = SweepAxis::alpha;
  CHECK_THROWS_AS(sweep(s), ArgumentError);
}

TEST_CASE("sweep rows") {
  const auto rows = sweep(xy_sweep(1.0, Grid1D(0.5, 1.5, 0.05)));
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].u >= 0.0);
    CHECK(rows[i].u <= 1.0);
    if (i > 0) CHECK(rows[i].axis_value > rows[i - 1].axis_value);
  }
  CHECK(rows[5].du == doctest::Approx((rows[6].u - rows[4].u) / 0.1));
  CHECK(rows[5].d_correlators[1] == doctest::Approx((rows[6].correlators.xx - rows[4].correlators.xx) / 0.1));
}

TEST_CASE("sweep failures name the axis value") {
  // Counting the x = pi mode twice produces an invalid two-site state
  // somewhere on this range.
  auto s = xyt_sweep(0.5, 0.5, 400, Grid1D(-1.5, 2.5, 0.05));
  s.base.mode_convention = xyt::ModeConvention::paper;
  try {
    sweep(s, 2);
    FAIL("expected a failure");
  } catch (const PointFailure& e) {
    REQUIRE(e.coordinates().size() == 1);
    CHECK(e.coordinates()[0].first == "lambda");
    CHECK(std::string(e.what()).find("lambda=") != std::string::npos);
  }
}

TEST_CASE("sweeps do not depend on the worker count") {
  const auto s = xyt_sweep(0.5, 0.25, 400, Grid1D(-1.5, 2.5, 0.01));
  const auto a = sweep(s, 1);
  const auto b = sweep(s, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].u == b[i].u);
    CHECK(a[i].du == b[i].du);
    CHECK(a[i].correlators.values() == b[i].correlators.values());
  }
}

TEST_CASE("detect_critical_points") {
  SUBCASE("smooth u and flat correlators give nothing") {
    std::vector<SweepRow> rows(40);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].axis_value = 0.1 * i;
      rows[i].u = 0.01 * i * i;
      rows[i].du = 0.02 * i;
    }
    CHECK(detect_critical_points(rows).empty());
  }
  SUBCASE("too few rows") {
    std::vector<SweepRow> rows(10);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].axis_value = i;
    CHECK_THROWS_AS(detect_critical_points(rows), ArgumentError);
  }
  SUBCASE("a du peak without correlator peaks is a branch switch") {
    std::vector<SweepRow> rows(40);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].axis_value = 0.1 * i;
      rows[i].du = i == 20 ? 5.0 : 0.1;
      rows[i].d_correlators = {0.3, 0.3, 0.3, 0.3};
      if (i == 10) rows[i].d_correlators[2] = 4.0;
    }
    const auto pts = detect_critical_points(rows);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].classification == Classification::branch_switch);
    rows[22].d_correlators[3] = 2.0;
    const auto again = detect_critical_points(rows);
    REQUIRE(again.size() == 1);
    CHECK(again[0].classification == Classification::qpt);
    CHECK(again[0].location == doctest::Approx(2.0));
  }
}

TEST_CASE("isotropic XY sweep") {
  const auto rows = sweep(xy_sweep(0.0, Grid1D(0.0, 2.5, 0.005)));
  const auto pts = detect_critical_points(rows);
  const auto qpts = qpt_locations(pts);
  CHECK(distance_to(qpts, 1.0) <= 0.01);
  for (const auto& p : pts) {
    if (std::abs(p.location - 1.0) > 0.02) CHECK(p.classification == Classification::branch_switch);
  }
}

TEST_CASE("XYT qpt points lie on the gap-closing lines") {
  const Grid1D lambdas(-1.5, 2.5, 0.005);
  for (double alpha : {0.5, 0.75}) {
    const auto pts = detect_critical_points(sweep(xyt_sweep(0.5, alpha, 400, lambdas)));
    const auto qpts = qpt_locations(pts);
    CAPTURE(alpha);
    REQUIRE_FALSE(qpts.empty());
    for (double q : qpts) {
      const double d = std::min(std::abs(q - (1.0 + 2.0 * alpha)), std::abs(q - (2.0 * alpha - 1.0)));
      CHECK(d <= 2.0 * lambdas.step() + 1e-12);
    }
    CHECK(distance_to(qpts, 2.0 * alpha - 1.0) <= 0.02);
    if (1.0 + 2.0 * alpha < 2.5 - 2 * lambdas.step()) CHECK(distance_to(qpts, 1.0 + 2.0 * alpha) <= 0.02);
  }
}

TEST_CASE("XYT critical locations do not depend on gamma") {
  // The lambda = 0 bumps shrink with gamma below the default prominence, so
  // the transition is located on the magnetization derivative with a fixed
  // relative threshold.
  const Grid1D lambdas(-1.5, 2.5, 0.005);
  for (double gamma : {0.3, 0.5, 0.8}) {
    CAPTURE(gamma);
    const auto rows = sweep(xyt_sweep(gamma, 0.5, 400, lambdas));
    std::vector<double> d;
    for (const auto& r : rows) d.push_back(r.d_correlators[0]);
    double top = 0.0;
    for (double v : d) top = std::max(top, std::abs(v));
    std::vector<double> found;
    for (const auto& p : numerics::find_peaks(lambdas, d, 0.1 * top)) found.push_back(p.location);
    for (double target : {0.0, 2.0}) CHECK(distance_to(found, target) <= 2.0 * lambdas.step() + 1e-12);
  }
}

TEST_CASE("phase_map") {
  SUBCASE("2x2 grid") {
    PhaseMapSpec spec;
    spec.base.model = Model::xy;
    spec.lambda_grid = Grid1D(0.5, 1.5, 1.0);
    spec.outer_grid = Grid1D(0.5, 1.0, 0.5);
    const auto map = phase_map(spec);
    REQUIRE(map.cells.size() == 4);
    CHECK(map.rows == 2);
    CHECK(map.cols == 2);
    CHECK(map.outer_axis == MapAxis::gamma);
    for (const auto& c : map.cells) {
      CHECK(std::isfinite(c.u));
      CHECK(std::isfinite(c.du));
    }
    CHECK(map.at(1, 0).outer == 1.0);
    CHECK(map.at(1, 0).lambda == 0.5);
  }
  SUBCASE("row-major and matching the sweep") {
    PhaseMapSpec spec;
    spec.base.model = Model::xyt;
    spec.base.gamma = 0.5;
    spec.lambda_grid = Grid1D(-1.5, 2.5, 0.05);
    spec.outer_grid = Grid1D(0.0, 1.0, 0.25);
    const auto map = phase_map(spec, 3);
    CHECK(map.outer_axis == MapAxis::alpha);
    const auto rows = sweep(xyt_sweep(0.5, 0.5, 400, spec.lambda_grid));
    for (std::size_t c = 0; c < map.cols; ++c) {
      CHECK(map.at(2, c).u == rows[c].u);
      CHECK(map.at(2, c).du == rows[c].du);
    }
  }
}
