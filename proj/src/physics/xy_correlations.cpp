#include "spincrit/xy_correlations.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "spincrit/numerics.hpp"

namespace spincrit::xy {
namespace {

constexpr double kPi = std::numbers::pi;

// th(phi) / (2 pi omega); the integrands vanish where omega does.
double kernel(double phi, const XYParams& p) {
  const double w = omega(phi, p);
  if (w == 0.0) return 0.0;
  return p.temperature.occupation_factor(w) / (2.0 * kPi * w);
}

// Integrates over [0, pi], splitting where 1 + lambda cos phi changes sign.
// At gamma = 0 the integrands jump there.
double integrate(const std::function<double(double)>& f, const XYParams& p) {
  if (p.lambda > 1.0) {
    const double kink = std::acos(-1.0 / p.lambda);
    if (kink < kPi) {
      const double tol = 0.5 * p.quad_tol;
      return numerics::integrate_adaptive(f, 0.0, kink, tol) +
             numerics::integrate_adaptive(f, kink, kPi, tol);
    }
  }
  return numerics::integrate_adaptive(f, 0.0, kPi, p.quad_tol);
}

}  // namespace

void XYParams::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError(fmt::format("XY: gamma {} outside [0, 1]", gamma));
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ArgumentError(fmt::format("XY: lambda {} must be >= 0", lambda));
  if (!(quad_tol > 0.0)) throw ArgumentError("XY: quad_tol must be > 0");
}

double omega(double phi, const XYParams& p) {
  const double a = p.gamma * p.lambda * std::sin(phi);
  const double b = 1.0 + p.lambda * std::cos(phi);
  return 0.5 * std::hypot(a, b);
}

double xy_magnetization(const XYParams& p) {
  p.validate();
  return -integrate([&p](double phi) { return (1.0 + p.lambda * std::cos(phi)) * kernel(phi, p); }, p);
}

double xy_G(int n, const XYParams& p) {
  p.validate();
  const double dn = n;
  return integrate(
      [&p, dn](double phi) {
        return kernel(phi, p) * (std::cos(dn * phi) * (1.0 + p.lambda * std::cos(phi)) -
                                 p.gamma * p.lambda * std::sin(dn * phi) * std::sin(phi));
      },
      p);
}

CorrelatorSet xy_correlators(int n, const XYParams& p) {
  p.validate();
  if (n < 1 || n > 32) throw ArgumentError(fmt::format("xy_correlators: separation {} outside [1, 32]", n));

  // G_k for k in [-n, n], shared by both determinants and zz.
  std::vector<double> g(2 * n + 1);
  for (int k = -n; k <= n; ++k) g[k + n] = xy_G(k, p);
  const auto gen = [&g, n](int k) { return g.at(static_cast<std::size_t>(k + n)); };

  CorrelatorSet c;
  c.n = n;
  c.sig_z = xy_magnetization(p);
  c.xx = numerics::shifted_toeplitz_det(gen, n, -1);
  c.yy = numerics::shifted_toeplitz_det(gen, n, +1);
  c.zz = c.sig_z * c.sig_z - gen(n) * gen(-n);
  return c;
}

}  // namespace spincrit::xy
