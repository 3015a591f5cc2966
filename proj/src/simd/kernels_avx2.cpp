// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "spincrit/simd/kernels.hpp"

namespace spincrit::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

// Four independent Dot2 lanes, merged with an error-free TwoSum cascade.
double dot_compensated_avx2(const double* x, const double* y, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d p = _mm256_mul_pd(xv, yv);
    const __m256d pe = _mm256_fmsub_pd(xv, yv, p);
    const __m256d t = _mm256_add_pd(s, p);
    const __m256d z = _mm256_sub_pd(t, s);
    const __m256d se =
        _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(t, z)), _mm256_sub_pd(p, z));
    s = t;
    c = _mm256_add_pd(c, _mm256_add_pd(se, pe));
  }
  alignas(32) double sl[4];
  alignas(32) double cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, c);

  double sum = 0.0;
  double comp = 0.0;
  auto two_sum_into = [&](double v) {
    const double t = sum + v;
    const double z = t - sum;
    comp += (sum - (t - z)) + (v - z);
    sum = t;
  };
  for (int l = 0; l < 4; ++l) {
    two_sum_into(sl[l]);
    comp += cl[l];
  }
  for (; i < n; ++i) {
    const double p = x[i] * y[i];
    comp += std::fma(x[i], y[i], -p);
    two_sum_into(p);
  }
  return sum + comp;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void rotate_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_fmsub_pd(cv, xv, _mm256_mul_pd(sv, yv)));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(sv, xv, _mm256_mul_pd(cv, yv)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = std::fma(c, xi, -s * yi);
    y[i] = std::fma(s, xi, c * yi);
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{Backend::avx2, &dot_avx2, &dot_compensated_avx2, &axpy_avx2,
                             &rotate_avx2};
  return t;
}

}  // namespace spincrit::simd::detail
