#pragma once

#include "spincrit/correlators.hpp"
#include "spincrit/linalg.hpp"

namespace spincrit {

/// Negative-eigenvalue tolerance shared by state validation and the square
/// root taken inside the LQU engine.
inline constexpr double kStateNegTol = 1e-8;

/// Two-site reduced density matrix in the basis |00>, |01>, |10>, |11>
/// (sigma^z|0> = +|0>).
struct TwoSiteState {
  linalg::HermitianMatrix matrix;
  CorrelatorSet source;
};

/// rho = 1/4 [I + sig_z (Z(x)I + I(x)Z) + xx X(x)X + yy Y(x)Y + zz Z(x)Z].
/// Throws InvalidCorrelators if the smallest eigenvalue is below -1e-8.
TwoSiteState build_rho(const CorrelatorSet& c);

struct StateDiagnostics {
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  /// Largest modulus among the entries an X-state must have zero.
  double x_structure_residual = 0.0;
};

StateDiagnostics state_diagnostics(const TwoSiteState& s);

}  // namespace spincrit
