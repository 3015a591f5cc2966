#pragma once

// Seeded random two-qubit states for oracle checks.

#include <random>

#include "spincrit/linalg.hpp"

namespace spincrit::states {

/// X-state with a uniformly random diagonal (on the simplex) and complex
/// anti-diagonal entries inside the positivity bounds |z|^2 <= products of
/// the matching diagonal entries.
linalg::HermitianMatrix random_x_state(std::mt19937_64& rng);

/// G G^dagger / tr(G G^dagger) with G a 4x4 complex Gaussian matrix.
linalg::HermitianMatrix random_mixed_state(std::mt19937_64& rng);

}  // namespace spincrit::states
