#pragma once

// Correlation functions of the anisotropic XY chain in the thermodynamic
// limit. lambda multiplies the exchange relative to a unit transverse field,
// so the critical point is lambda = 1.

#include "spincrit/correlators.hpp"
#include "spincrit/temperature.hpp"

namespace spincrit::xy {

struct XYParams {
  double gamma = 0.0;
  double lambda = 0.0;
  Temperature temperature = Temperature::zero();
  double quad_tol = 1e-10;

  void validate() const;
};

/// omega(phi) = sqrt((gamma lambda sin phi)^2 + (1 + lambda cos phi)^2) / 2
double omega(double phi, const XYParams& p);

/// <sigma^z> = -int_0^pi (1 + lambda cos phi) th(phi) / (2 pi omega) dphi
double xy_magnetization(const XYParams& p);

/// G_n = int_0^pi th(phi) / (2 pi omega) [cos(n phi)(1 + lambda cos phi)
///        - gamma lambda sin(n phi) sin phi] dphi
double xy_G(int n, const XYParams& p);

/// xx and yy as n x n shifted Toeplitz determinants of G (shifts -1 and +1),
/// zz = <sigma^z>^2 - G_n G_{-n}. Requires 1 <= n <= 32.
CorrelatorSet xy_correlators(int n, const XYParams& p);

}  // namespace spincrit::xy
