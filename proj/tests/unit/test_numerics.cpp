#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "spincrit/errors.hpp"
#include "spincrit/numerics.hpp"

using namespace spincrit;
using namespace spincrit::numerics;

constexpr double pi = std::numbers::pi;

TEST_CASE("Grid1D") {
  SUBCASE("absorbs rounding at the end of a range") {
    const Grid1D g(0.0, 2.5, 0.005);
    CHECK(g.size() == 501);
    CHECK(g[500] == 2.5);
    CHECK(g[1] == 0.005);
  }
  SUBCASE("degenerate single point") {
    const Grid1D g(1.0, 1.0, 0.1);
    CHECK(g.size() == 1);
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(Grid1D(1.0, 0.0, 0.1), ArgumentError);
    CHECK_THROWS_AS(Grid1D(0.0, NAN, 0.1), ArgumentError);
  }
  SUBCASE("from_values round trip") {
    const Grid1D g(-1.5, 2.5, 0.005);
    const auto h = Grid1D::from_values(g.values());
    CHECK(h.size() == g.size());
    CHECK(h.step() == doctest::Approx(0.005));
    const std::vector<double> bad{0.0, 1.0, 3.0};
    CHECK_THROWS_AS(Grid1D::from_values(bad), ArgumentError);
  }
}

TEST_CASE("adaptive quadrature") {
  CHECK(std::abs(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi) - 2.0) <= 1e-10);
  CHECK(std::abs(integrate_adaptive([](double x) { return std::cos(2.0 * x); }, 0.0, pi)) <= 1e-10);
  CHECK(std::abs(integrate_adaptive([](double) { return 1.0 / (2.0 * pi * 0.5); }, 0.0, pi) - 1.0) <= 1e-12);

  SUBCASE("kinked integrand meets the tolerance") {
    const auto r = integrate_adaptive_report([](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0,
                                             {.abs_tol = 1e-12});
    const double exact = (1.0 / 9.0 + 4.0 / 9.0) / 2.0;
    CHECK(std::abs(r.value - exact) <= 1e-12);
    CHECK(r.panels > 1);
  }
  SUBCASE("agrees with a fixed composite rule on a peaked integrand") {
    const auto f = [](double x) { return 1.0 / (1e-3 + x * x); };
    const double ref = oracle::simpson(f, -1.0, 1.0, 2'000'000);
    CHECK(std::abs(integrate_adaptive(f, -1.0, 1.0) - ref) <= 1e-8);
    CHECK(std::abs(ref - 2.0 * std::atan(1.0 / std::sqrt(1e-3)) / std::sqrt(1e-3)) <= 1e-6);
  }
  SUBCASE("a jump off the bisection points exhausts the depth") {
    const auto step = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
    CHECK_THROWS_AS(integrate_adaptive_report(step, 0.0, 1.0, {.abs_tol = 1e-12, .max_depth = 20}), QuadratureError);
    try {
      integrate_adaptive_report(step, 0.0, 1.0, {.abs_tol = 1e-12, .max_depth = 20});
    } catch (const QuadratureError& e) {
      CHECK(std::abs(e.estimate() - 2.0 / 3.0) < 1e-3);
      CHECK(e.error_bound() > 1e-12);
    }
  }
}

TEST_CASE("central_derivative") {
  SUBCASE("quadratic is exact in the interior") {
    const Grid1D g(0.0, 2.0, 0.1);
    std::vector<double> y;
    for (double x : g.values()) y.push_back(x * x);
    const auto d = central_derivative(g, y);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) CHECK(d[i] == doctest::Approx(2.0 * g[i]).epsilon(1e-12));
  }
  SUBCASE("constant gives zeros") {
    const Grid1D g(0.0, 1.0, 0.25);
    const std::vector<double> y(g.size(), 3.0);
    for (double v : central_derivative(g, y)) CHECK(v == 0.0);
  }
  SUBCASE("kink") {
    const Grid1D g(0.0, 2.0, 0.01);
    std::vector<double> y;
    for (double x : g.values()) y.push_back(std::abs(x - 1.0));
    const auto d = central_derivative(g, y);
    CHECK(std::abs(d[100]) <= 1e-12);
    CHECK(d[50] == doctest::Approx(-1.0));
    CHECK(d[150] == doctest::Approx(1.0));
  }
  SUBCASE("size mismatch") {
    const Grid1D g(0.0, 1.0, 0.25);
    const std::vector<double> y(3, 0.0);
    CHECK_THROWS_AS(central_derivative(g, y), ArgumentError);
  }
}

TEST_CASE("find_peaks") {
  const Grid1D g(0.0, 2.0, 0.01);
  const auto bump = [](double x, double c) { return std::exp(-(x - c) * (x - c) / 0.02); };

  SUBCASE("single bump") {
    std::vector<double> y;
    for (double x : g.values()) y.push_back(bump(x, 1.0));
    const auto p = find_peaks(g, y, 0.1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].location == doctest::Approx(1.0));
    CHECK(p[0].kind == PeakKind::maximum);
  }
  SUBCASE("constant") {
    const std::vector<double> y(g.size(), 0.7);
    CHECK(find_peaks(g, y, 1e-3).empty());
  }
  SUBCASE("two bumps in ascending order") {
    std::vector<double> y;
    for (double x : g.values()) y.push_back(bump(x, 0.5) + 0.8 * bump(x, 1.5));
    const auto p = find_peaks(g, y, 0.1);
    REQUIRE(p.size() == 2);
    CHECK(p[0].location == doctest::Approx(0.5));
    CHECK(p[1].location == doctest::Approx(1.5));
  }
  SUBCASE("peaks are taken on magnitudes") {
    std::vector<double> y;
    for (double x : g.values()) y.push_back(-bump(x, 1.0));
    const auto p = find_peaks(g, y, 0.1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].height == doctest::Approx(1.0));
  }
  SUBCASE("prominence filters a shoulder") {
    std::vector<double> y;
    for (double x : g.values()) y.push_back(bump(x, 0.7) + 0.05 * bump(x, 1.4));
    CHECK(find_peaks(g, y, 0.1).size() == 1);
  }
  SUBCASE("plateau is a discontinuity candidate at its middle") {
    std::vector<double> y(g.size(), 0.0);
    y[100] = y[101] = y[102] = 1.0;
    const auto p = find_peaks(g, y, 0.5);
    REQUIRE(p.size() == 1);
    CHECK(p[0].index == 101);
    CHECK(p[0].kind == PeakKind::discontinuity_candidate);
  }
  SUBCASE("two equal samples are a discontinuity candidate") {
    std::vector<double> y(g.size(), 0.1);
    y[50] = 2.0;
    y[51] = 2.0 * (1.0 - 1e-3);
    const auto p = find_peaks(g, y, 0.5);
    REQUIRE(p.size() == 1);
    CHECK(p[0].index == 50);
    CHECK(p[0].kind == PeakKind::discontinuity_candidate);
  }
  SUBCASE("default prominence") {
    const std::vector<double> y{1.0, -2.0, 3.0, 4.0};
    CHECK(default_prominence(y) == doctest::Approx(12.5));
  }
}

TEST_CASE("shifted_toeplitz_det") {
  SUBCASE("1x1") {
    const auto gen = [](int k) { return 0.3 + k; };
    CHECK(shifted_toeplitz_det(gen, 1, -1) == doctest::Approx(gen(-1)));
  }
  SUBCASE("identity") {
    for (int n = 1; n <= 6; ++n) CHECK(shifted_toeplitz_det([](int k) { return k == 0 ? 1.0 : 0.0; }, n, 0) == 1.0);
  }
  SUBCASE("2x2") {
    const double a = 0.7, b = -0.2, c = 1.3;
    const auto gen = [&](int k) { return k == 1 ? a : k == 0 ? b : k == 2 ? c : 0.0; };
    CHECK(shifted_toeplitz_det(gen, 2, 1) == doctest::Approx(a * a - b * c));
  }
  SUBCASE("agrees with cofactor expansion") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> table(21);
    for (auto& t : table) t = u(rng);
    const auto gen = [&](int k) { return table.at(static_cast<std::size_t>(k + 10)); };
    for (int n = 1; n <= 7; ++n) {
      for (int shift : {-1, 0, 1}) {
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) m[i][j] = gen(i - j + shift);
        }
        CHECK(shifted_toeplitz_det(gen, n, shift) == doctest::Approx(oracle::cofactor_det(m)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("determinant") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<double> flat(n * n);
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = m[i][j] = u(rng);
    }
    CHECK(determinant(flat, n) == doctest::Approx(oracle::cofactor_det(m)).epsilon(1e-12));
  }
  CHECK(determinant({1.0, 2.0, 2.0, 4.0}, 2) == 0.0);
  CHECK(determinant({0.0, 1.0, 1.0, 0.0}, 2) == -1.0);
}
