#include <arm_neon.h>

#include <cmath>

#include "spincrit/simd/kernels.hpp"

namespace spincrit::simd::detail {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double dot_compensated_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t s = vdupq_n_f64(0.0);
  float64x2_t c = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    const float64x2_t yv = vld1q_f64(y + i);
    const float64x2_t p = vmulq_f64(xv, yv);
    const float64x2_t pe = vfmsq_f64(vnegq_f64(p), xv, vnegq_f64(yv));
    const float64x2_t t = vaddq_f64(s, p);
    const float64x2_t z = vsubq_f64(t, s);
    const float64x2_t se = vaddq_f64(vsubq_f64(s, vsubq_f64(t, z)), vsubq_f64(p, z));
    s = t;
    c = vaddq_f64(c, vaddq_f64(se, pe));
  }
  double sl[2];
  double cl[2];
  vst1q_f64(sl, s);
  vst1q_f64(cl, c);

  double sum = 0.0;
  double comp = 0.0;
  auto two_sum_into = [&](double v) {
    const double t = sum + v;
    const double z = t - sum;
    comp += (sum - (t - z)) + (v - z);
    sum = t;
  };
  for (int l = 0; l < 2; ++l) {
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

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void rotate_neon(double* x, double* y, std::size_t n, double c, double s) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    const float64x2_t yv = vld1q_f64(y + i);
    vst1q_f64(x + i, vfmsq_n_f64(vmulq_n_f64(xv, c), yv, s));
    vst1q_f64(y + i, vfmaq_n_f64(vmulq_n_f64(yv, c), xv, s));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable t{Backend::neon, &dot_neon, &dot_compensated_neon, &axpy_neon,
                             &rotate_neon};
  return t;
}

}  // namespace spincrit::simd::detail
