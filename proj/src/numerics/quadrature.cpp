#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/numerics.hpp"
#include "spincrit/simd/kernels.hpp"

namespace spincrit::numerics {
namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Newton iteration on P_n from the Chebyshev initial guesses.
GaussLegendre make_rule() {
  GaussLegendre rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& rule() {
  static const GaussLegendre r = make_rule();
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const auto& r = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::array<double, kOrder> values{};
  for (int i = 0; i < kOrder; ++i) values[i] = f(mid + half * r.nodes[i]);
  return half * simd::dot(r.weights, values);
}

struct Interval {
  double a;
  double b;
  int depth;
  double left;   // panel estimate on [a, mid]
  double right;  // panel estimate on [mid, b]
  double error;  // |coarse - (left + right)|

  double value() const { return left + right; }
};

Interval make_interval(const std::function<double(double)>& f, double a, double b, int depth,
                       double coarse) {
  const double mid = 0.5 * (a + b);
  Interval iv{a, b, depth, panel(f, a, mid), panel(f, mid, b), 0.0};
  iv.error = std::abs(coarse - iv.value());
  if (!std::isfinite(iv.error)) {
    throw ArgumentError(fmt::format("integrand is not finite on [{}, {}]", a, b));
  }
  return iv;
}

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace

QuadratureResult integrate_adaptive_report(const std::function<double(double)>& f, double a,
                                           double b, const QuadratureOptions& options) {
  if (!(a < b)) throw ArgumentError("integrate_adaptive: need a < b");
  if (!(options.abs_tol > 0.0)) throw ArgumentError("integrate_adaptive: abs_tol must be > 0");
  if (options.max_depth < 1) throw ArgumentError("integrate_adaptive: max_depth must be >= 1");

  std::priority_queue<Interval, std::vector<Interval>, ByError> work;
  work.push(make_interval(f, a, b, 0, panel(f, a, b)));
  double total_error = work.top().error;

  while (total_error > options.abs_tol) {
    Interval worst = work.top();
    if (worst.depth >= options.max_depth) {
      // Re-sum before giving up; the running total can drift.
      double err = 0.0;
      double value = 0.0;
      auto copy = work;
      while (!copy.empty()) {
        err += copy.top().error;
        value += copy.top().value();
        copy.pop();
      }
      if (err <= options.abs_tol) break;
      throw QuadratureError(
          fmt::format("integrate_adaptive: depth {} reached on [{}, {}] with error bound {:.3g} "
                      "(tolerance {:.3g})",
                      options.max_depth, a, b, err, options.abs_tol),
          value, err);
    }
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Interval lo = make_interval(f, worst.a, mid, worst.depth + 1, worst.left);
    Interval hi = make_interval(f, mid, worst.b, worst.depth + 1, worst.right);
    total_error += lo.error + hi.error - worst.error;
    work.push(lo);
    work.push(hi);

    if (total_error <= options.abs_tol) {
      double exact = 0.0;
      auto copy = work;
      while (!copy.empty()) {
        exact += copy.top().error;
        copy.pop();
      }
      total_error = exact;
    }
  }

  std::vector<Interval> leaves;
  leaves.reserve(work.size());
  while (!work.empty()) {
    leaves.push_back(work.top());
    work.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });

  QuadratureResult out;
  double comp = 0.0;
  for (const auto& iv : leaves) {
    const double v = iv.value();
    const double t = out.value + v;
    comp += std::abs(out.value) >= std::abs(v) ? (out.value - t) + v : (v - t) + out.value;
    out.value = t;
    out.error_bound += iv.error;
  }
  out.value += comp;
  out.panels = leaves.size();
  return out;
}

}  // namespace spincrit::numerics
