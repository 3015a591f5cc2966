#pragma once

// Finite-ring correlation functions of the XY chain with the three-spin
// term (XYT), as momentum sums over x_k = 2 pi k / N. alpha = 0 gives the
// finite-N XY chain.

#include <vector>

#include "spincrit/correlators.hpp"
#include "spincrit/temperature.hpp"

namespace spincrit::xyt {

/// Which momenta enter the sums. `paper` uses k = -M..M with M = floor(N/2),
/// which for even N counts the x = pi mode twice; `symmetric` drops k = -N/2
/// for even N so that exactly N distinct momenta are summed.
enum class ModeConvention { paper, symmetric };

struct XYTParams {
  double gamma = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  int N = 2;
  Temperature temperature = Temperature::zero();
  ModeConvention mode_convention = ModeConvention::symmetric;

  void validate() const;
};

struct ModeData {
  int k = 0;
  double x = 0.0;     // 2 pi k / N
  double zeta = 0.0;  // lambda - cos x - 2 alpha cos 2x
  double eps = 0.0;   // sqrt(zeta^2 + gamma^2 sin^2 x)
};

std::vector<ModeData> mode_grid(const XYTParams& p);

/// Per-parameter-point table of mode weights th_k / eps_k, shared by all the
/// g_n of one correlator evaluation. Sums run in ascending k with
/// compensated accumulation.
class ModeSums {
 public:
  explicit ModeSums(const XYTParams& p);

  /// (1/N) sum_k zeta_k th_k / eps_k
  double magnetization() const;
  /// -(1/N) sum_k [cos(x_k n) zeta_k + gamma sin(x_k n) sin x_k] th_k / eps_k
  double g(int n) const;

  const XYTParams& params() const noexcept { return params_; }

 private:
  // cos(x_k n) . a  and  sin(x_k n) . b
  double cos_sum(int n) const;
  double sin_sum(int n) const;

  XYTParams params_;
  std::vector<double> x_;
  std::vector<double> a_;  // zeta_k w_k
  std::vector<double> b_;  // sin(x_k) w_k
};

double xyt_magnetization(const XYTParams& p);
double xyt_g(int n, const XYTParams& p);

/// Requires 1 <= n <= 32 and n < N / 2.
CorrelatorSet xyt_correlators(int n, const XYTParams& p);
CorrelatorSet xyt_correlators(int n, const ModeSums& sums);

/// min_k eps_k over the mode grid.
double min_gap(const XYTParams& p);

}  // namespace spincrit::xyt
