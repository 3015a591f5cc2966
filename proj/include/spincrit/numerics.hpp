#pragma once

// Scalar numerics shared by the physics modules: adaptive quadrature, grid
// differentiation, peak detection and determinants of shifted Toeplitz
// matrices.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace spincrit::numerics {

/// Uniform, strictly increasing grid: values[i] = start + i * step, with the
/// last value <= stop < last + step.
class Grid1D {
 public:
  Grid1D(double start, double stop, double step);

  /// Rebuilds a grid from already-sampled uniform values (at least two).
  static Grid1D from_values(std::span<const double> values);

  double start() const noexcept { return start_; }
  double stop() const noexcept { return stop_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  Grid1D() = default;

  double start_ = 0.0;
  double stop_ = 0.0;
  double step_ = 1.0;
  std::vector<double> values_;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 30;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive bisection over 20-point Gauss-Legendre panels. The
/// interval with the largest error estimate is split until the summed
/// estimate is within abs_tol. Throws QuadratureError when an interval
/// would need splitting past max_depth.
QuadratureResult integrate_adaptive_report(const std::function<double(double)>& f, double a,
                                           double b, const QuadratureOptions& options = {});

inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double abs_tol = 1e-10) {
  return integrate_adaptive_report(f, a, b, {.abs_tol = abs_tol}).value;
}

/// Central differences in the interior, one-sided at the two ends.
std::vector<double> central_derivative(const Grid1D& xs, std::span<const double> ys);

enum class PeakKind { maximum, discontinuity_candidate };

struct PeakReport {
  std::size_t index = 0;
  double location = 0.0;
  double height = 0.0;  // |ys[index]|
  PeakKind kind = PeakKind::maximum;
};

/// Interior local maxima of |ys| with topographic prominence >= prominence.
/// The baseline of a peak is the higher of the two lowest points reached
/// before |ys| climbs above the peak on either side (or the series ends).
/// Flat tops are reported at their middle sample. A peak is a
/// discontinuity candidate when its top (a flat run, or two samples within 1%)
/// stands above twice the samples just outside it, the signature of a jump in
/// the underlying curve straddled by two central differences.
std::vector<PeakReport> find_peaks(const Grid1D& xs, std::span<const double> ys,
                                   double prominence);

/// 5 x median(|ys|).
double default_prominence(std::span<const double> ys);

/// det(A) with A[i][j] = gen(i - j + shift) for 1 <= i, j <= n.
double shifted_toeplitz_det(const std::function<double(int)>& gen, int n, int shift);

/// Determinant of a dense row-major n x n matrix by LU with partial pivoting.
double determinant(std::vector<double> a, std::size_t n);

}  // namespace spincrit::numerics
