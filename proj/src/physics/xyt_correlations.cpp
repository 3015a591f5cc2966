#include "spincrit/xyt_correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "spincrit/numerics.hpp"
#include "spincrit/simd/kernels.hpp"

namespace spincrit::xyt {

void XYTParams::validate() const {
  if (N < 2) throw ArgumentError(fmt::format("XYT: chain length {} must be >= 2", N));
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError(fmt::format("XYT: gamma {} outside [0, 1]", gamma));
  if (!std::isfinite(lambda)) throw ArgumentError("XYT: lambda must be finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ArgumentError(fmt::format("XYT: alpha {} must be >= 0", alpha));
}

std::vector<ModeData> mode_grid(const XYTParams& p) {
  p.validate();
  const int m = p.N / 2;
  const int first = (p.N % 2 == 0 && p.mode_convention == ModeConvention::symmetric) ? -m + 1 : -m;

  std::vector<ModeData> modes;
  modes.reserve(static_cast<std::size_t>(m - first + 1));
  for (int k = first; k <= m; ++k) {
    ModeData d;
    d.k = k;
    d.x = 2.0 * std::numbers::pi * k / p.N;
    d.zeta = p.lambda - std::cos(d.x) - 2.0 * p.alpha * std::cos(2.0 * d.x);
    d.eps = std::hypot(d.zeta, p.gamma * std::sin(d.x));
    modes.push_back(d);
  }
  return modes;
}

ModeSums::ModeSums(const XYTParams& p) : params_(p) {
  const auto modes = mode_grid(p);
  x_.reserve(modes.size());
  a_.reserve(modes.size());
  b_.reserve(modes.size());
  for (const auto& mode : modes) {
    const double w = p.temperature.weight(mode.eps);
    x_.push_back(mode.x);
    a_.push_back(mode.zeta * w);
    b_.push_back(std::sin(mode.x) * w);
  }
}

double ModeSums::cos_sum(int n) const {
  std::vector<double> c(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) c[i] = n == 0 ? 1.0 : std::cos(x_[i] * n);
  return simd::dot_compensated(c, a_);
}

double ModeSums::sin_sum(int n) const {
  if (n == 0) return 0.0;
  std::vector<double> s(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) s[i] = std::sin(x_[i] * n);
  return simd::dot_compensated(s, b_);
}

double ModeSums::magnetization() const { return cos_sum(0) / params_.N; }

double ModeSums::g(int n) const {
  return -(cos_sum(n) + params_.gamma * sin_sum(n)) / params_.N;
}

double xyt_magnetization(const XYTParams& p) { return ModeSums(p).magnetization(); }

double xyt_g(int n, const XYTParams& p) { return ModeSums(p).g(n); }

CorrelatorSet xyt_correlators(int n, const ModeSums& sums) {
  const auto& p = sums.params();
  if (n < 1 || n > 32) throw ArgumentError(fmt::format("xyt_correlators: separation {} outside [1, 32]", n));
  if (2 * n >= p.N) {
    throw ArgumentError(fmt::format("xyt_correlators: separation {} must be below N/2 = {}", n, p.N / 2.0));
  }
  std::vector<double> g(2 * n + 1);
  for (int k = -n; k <= n; ++k) g[k + n] = sums.g(k);
  const auto gen = [&g, n](int k) { return g.at(static_cast<std::size_t>(k + n)); };

  CorrelatorSet c;
  c.n = n;
  c.sig_z = sums.magnetization();
  c.xx = numerics::shifted_toeplitz_det(gen, n, -1);
  c.yy = numerics::shifted_toeplitz_det(gen, n, +1);
  c.zz = c.sig_z * c.sig_z - gen(n) * gen(-n);
  return c;
}

CorrelatorSet xyt_correlators(int n, const XYTParams& p) { return xyt_correlators(n, ModeSums(p)); }

double min_gap(const XYTParams& p) {
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& mode : mode_grid(p)) gap = std::min(gap, mode.eps);
  return gap;
}

}  // namespace spincrit::xyt
