#include <cmath>

#include "spincrit/simd/kernels.hpp"

namespace spincrit::simd::detail {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

// Ascending-index Dot2.
double dot_compensated_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  double c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = x[i] * y[i];
    const double pe = std::fma(x[i], y[i], -p);
    const double t = s + p;
    const double z = t - s;
    const double se = (s - (t - z)) + (p - z);
    s = t;
    c += se + pe;
  }
  return s + c;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void rotate_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Backend::scalar, &dot_scalar, &dot_compensated_scalar, &axpy_scalar,
                             &rotate_scalar};
  return t;
}

}  // namespace spincrit::simd::detail
