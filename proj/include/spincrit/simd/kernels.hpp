#pragma once

// Data-parallel inner loops shared by the quadrature panels, the mode sums of
// the finite chain and the dense eigensolver. Every kernel has a portable
// scalar reference; AVX2+FMA (x86-64) and NEON (aarch64) variants are chosen
// once per process at first use.
//
// Set SPINCRIT_SIMD=scalar in the environment to force the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace spincrit::simd {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

struct KernelTable {
  Backend backend;
  /// sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// Compensated dot product (TwoProduct/TwoSum, Ogita-Rump-Oishi "Dot2").
  /// Accurate as if accumulated in twice the working precision.
  double (*dot_compensated)(const double* x, const double* y, std::size_t n);
  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// Plane rotation of two rows: x' = c x - s y, y' = s x + c y.
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
};

bool available(Backend b);

/// Kernel table for a specific backend. Throws ArgumentError when the
/// backend is not compiled in or not supported by the running CPU.
const KernelTable& table(Backend b);

/// The table selected for this process.
const KernelTable& active();

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

inline double dot_compensated(std::span<const double> x, std::span<const double> y) {
  return active().dot_compensated(x.data(), y.data(), x.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}

inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active().rotate(x.data(), y.data(), x.size(), c, s);
}

namespace detail {
const KernelTable& scalar_table();
#if defined(SPINCRIT_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(SPINCRIT_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace spincrit::simd
