#include <cmath>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/numerics.hpp"

namespace spincrit::numerics {

Grid1D::Grid1D(double start, double stop, double step) : start_(start), stop_(stop), step_(step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ArgumentError("Grid1D: start, stop and step must be finite");
  }
  if (!(step > 0.0)) throw ArgumentError("Grid1D: step must be > 0");
  if (stop < start) throw ArgumentError("Grid1D: stop must be >= start");

  // Absorb rounding in (stop - start) / step so that 0:2.5:0.005 ends at 2.5.
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  values_.resize(count);
  for (std::size_t i = 0; i < count; ++i) values_[i] = start + static_cast<double>(i) * step;
  if (values_.back() > stop) values_.back() = stop;
}

Grid1D Grid1D::from_values(std::span<const double> values) {
  if (values.size() < 2) throw ArgumentError("Grid1D::from_values: need at least two values");
  const double step = values[1] - values[0];
  if (!(step > 0.0)) throw ArgumentError("Grid1D::from_values: values must increase");
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double expected = values[0] + static_cast<double>(i) * step;
    if (std::abs(values[i] - expected) > 1e-9 * step) {
      throw ArgumentError(fmt::format("Grid1D::from_values: value {} breaks uniform spacing", i));
    }
  }
  Grid1D g;
  g.start_ = values.front();
  g.stop_ = values.back();
  g.step_ = step;
  g.values_.assign(values.begin(), values.end());
  return g;
}

std::vector<double> central_derivative(const Grid1D& xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) {
    throw ArgumentError(fmt::format("central_derivative: {} values for a grid of {}", ys.size(), n));
  }
  if (n < 3) throw ArgumentError("central_derivative: need at least 3 points");

  const double h = xs.step();
  std::vector<double> d(n);
  d.front() = (ys[1] - ys[0]) / h;
  d.back() = (ys[n - 1] - ys[n - 2]) / h;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (ys[i + 1] - ys[i - 1]) / (2.0 * h);
  return d;
}

}  // namespace spincrit::numerics
