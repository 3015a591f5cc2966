#pragma once

// Brute-force exact diagonalization of small periodic rings,
//
//   H = -1/2 sum_j [(1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1} + lambda Z_j
//                   + alpha (X_{j-1} X_{j+1} + Y_{j-1} Y_{j+1}) Z_j],
//
// indices mod N, used to check the analytic correlators. Site 0 is the most
// significant bit of a basis index; bit value 0 is sigma^z = +1.

#include "spincrit/correlators.hpp"
#include "spincrit/linalg.hpp"
#include "spincrit/temperature.hpp"
#include "spincrit/xy_correlations.hpp"
#include "spincrit/xyt_correlations.hpp"

namespace spincrit::ed {

inline constexpr int kMaxSites = 10;

struct DenseHamiltonian {
  int N = 2;
  Model model = Model::xyt;
  xyt::XYTParams params;  // alpha is 0 for Model::xy
  linalg::HermitianMatrix matrix;
};

/// Requires 2 <= N <= 10. Model::xy ignores params.alpha.
DenseHamiltonian build_hamiltonian(Model model, const xyt::XYTParams& p);

/// exp(-beta H) / Z, or at zero temperature the equal mixture of every
/// eigenstate within 1e-10 of the ground energy.
linalg::HermitianMatrix thermal_state(const DenseHamiltonian& h, const Temperature& t);

/// <sigma^z> (averaged over sites i and j) and <sigma^k_i sigma^k_j>.
/// Requires 0 <= i < j < N and a 2^N-dimensional state.
CorrelatorSet ed_correlators(const linalg::HermitianMatrix& state, int N, int i, int j);

/// Ring parameters whose exact spectrum matches the momentum sums at
/// `analytic`: the single-mode energies 2 eps_k of the sums belong to the
/// ring with the field and the three-spin coupling doubled.
xyt::XYTParams ring_params_for(const xyt::XYTParams& analytic);

/// Ring of N sites matching the thermodynamic-limit XY correlators at
/// `analytic` (lambda > 0): field -2/lambda with unit exchange, beta scaled
/// by lambda/2.
xyt::XYTParams ring_params_for(const xy::XYParams& analytic, int N);

}  // namespace spincrit::ed
