#include "spincrit/random_states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace spincrit::states {

using linalg::CMatrix;
using linalg::Complex;
using linalg::HermitianMatrix;

namespace {

// Uniform draws are built from raw engine output so the sequence does not
// depend on the standard library's distribution implementations.
double uniform(std::mt19937_64& rng) { return std::generate_canonical<double, 53>(rng); }

double gaussian(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform(rng);
  const double u2 = uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex in_disc(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng));
  const double phase = 2.0 * std::numbers::pi * uniform(rng);
  return std::polar(r, phase);
}

}  // namespace

HermitianMatrix random_x_state(std::mt19937_64& rng) {
  std::array<double, 4> d{};
  double total = 0.0;
  for (auto& v : d) {
    v = -std::log(1.0 - uniform(rng));
    total += v;
  }
  for (auto& v : d) v /= total;

  CMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
  const Complex outer = in_disc(rng, std::sqrt(d[0] * d[3]));
  const Complex inner = in_disc(rng, std::sqrt(d[1] * d[2]));
  m(0, 3) = outer;
  m(3, 0) = std::conj(outer);
  m(1, 2) = inner;
  m(2, 1) = std::conj(inner);
  return HermitianMatrix::from_matrix(m);
}

HermitianMatrix random_mixed_state(std::mt19937_64& rng) {
  CMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double re = gaussian(rng);
      const double im = gaussian(rng);
      g(i, j) = Complex(re, im);
    }
  }
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) /= tr;
  }
  return HermitianMatrix::from_matrix(rho);
}

}  // namespace spincrit::states
