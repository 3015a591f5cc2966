#include "spincrit/state_builder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "spincrit/errors.hpp"

namespace spincrit {

using linalg::CMatrix;
using linalg::HermitianMatrix;

TwoSiteState build_rho(const CorrelatorSet& c) {
  for (double v : c.values()) {
    if (!std::isfinite(v)) throw ArgumentError("build_rho: correlators must be finite");
  }
  // X(x)X and Y(x)Y only touch the anti-diagonal; Z terms the diagonal.
  CMatrix m(4, 4);
  m(0, 0) = (1.0 + 2.0 * c.sig_z + c.zz) / 4.0;
  m(1, 1) = (1.0 - c.zz) / 4.0;
  m(2, 2) = (1.0 - c.zz) / 4.0;
  m(3, 3) = (1.0 - 2.0 * c.sig_z + c.zz) / 4.0;
  m(1, 2) = m(2, 1) = (c.xx + c.yy) / 4.0;
  m(0, 3) = m(3, 0) = (c.xx - c.yy) / 4.0;

  TwoSiteState s{HermitianMatrix::from_matrix(m), c};
  const double min_eig = linalg::eigh(s.matrix).eigenvalues.front();
  if (min_eig < -kStateNegTol) {
    throw InvalidCorrelators(
        fmt::format("build_rho: correlators (sig_z={}, xx={}, yy={}, zz={}) give eigenvalue {:.3g}",
                    c.sig_z, c.xx, c.yy, c.zz, min_eig),
        min_eig);
  }
  return s;
}

StateDiagnostics state_diagnostics(const TwoSiteState& s) {
  StateDiagnostics d;
  d.trace_deviation = std::abs(s.matrix.trace() - 1.0);
  d.min_eigenvalue = linalg::eigh(s.matrix).eigenvalues.front();
  if (s.matrix.dim() == 4) {
    constexpr std::array<std::pair<int, int>, 8> zeros{
        {{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};
    for (auto [i, j] : zeros) d.x_structure_residual = std::max(d.x_structure_residual, std::abs(s.matrix(i, j)));
  }
  return d;
}

}  // namespace spincrit
