#pragma once

#include <array>

namespace spincrit {

/// Thermodynamic-limit XY chain, or the finite XY chain with the three-spin term.
enum class Model { xy, xyt };

/// One-site magnetization and the three two-site Pauli correlators of
/// sites (0, n).
struct CorrelatorSet {
  int n = 1;
  double sig_z = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;

  std::array<double, 4> values() const { return {sig_z, xx, yy, zz}; }
};

}  // namespace spincrit
