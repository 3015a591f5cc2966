#pragma once

// Reference computations for the test suites. Each one deliberately takes a
// different route from the library code it checks: cofactor expansion
// instead of LU, fixed composite rules instead of adaptive quadrature, and
// long-double direct sums instead of the compensated SIMD kernels.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "spincrit/linalg.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// Laplace expansion along the first row.
inline double cofactor_det(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0;
  if (n == 1) return m[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * cofactor_det(minor);
  }
  return det;
}

/// Composite Simpson rule on `panels` (even) equal panels, summed in long double.
inline double simpson(const std::function<double(double)>& f, double a, double b, long panels) {
  const long double h = (static_cast<long double>(b) - a) / panels;
  long double sum = f(a) + f(b);
  for (long i = 1; i < panels; ++i) {
    const double x = static_cast<double>(a + i * h);
    sum += (i % 2 == 1 ? 4.0L : 2.0L) * f(x);
  }
  return static_cast<double>(sum * h / 3.0L);
}

/// Thermodynamic-limit XY quantities by fixed Simpson quadrature.
struct XYReference {
  double gamma;
  double lambda;
  double beta;  // <= 0 means zero temperature
  long panels = 1'000'000;

  double kernel(double phi) const {
    const double a = gamma * lambda * std::sin(phi);
    const double b = 1.0 + lambda * std::cos(phi);
    const double w = 0.5 * std::sqrt(a * a + b * b);
    const double th = beta > 0.0 ? std::tanh(beta * w) : 1.0;
    return w == 0.0 ? 0.0 : th / (2.0 * std::numbers::pi * w);
  }
  double magnetization() const {
    return -simpson([this](double p) { return (1.0 + lambda * std::cos(p)) * kernel(p); }, 0.0, std::numbers::pi,
                    panels);
  }
  double G(int n) const {
    return simpson(
        [this, n](double p) {
          return kernel(p) * (std::cos(n * p) * (1.0 + lambda * std::cos(p)) -
                              gamma * lambda * std::sin(n * p) * std::sin(p));
        },
        0.0, std::numbers::pi, panels);
  }
};

/// Finite-ring XYT sums over the N distinct momenta 2 pi k / N, k = 0..N-1,
/// evaluated directly in long double.
struct XYTReference {
  double gamma;
  double lambda;
  double alpha;
  int N;
  double beta;  // <= 0 means zero temperature

  long double weight(long double eps) const {
    if (eps < 1e-14L) return beta > 0.0 ? beta : 0.0L;
    return (beta > 0.0 ? std::tanh(beta * eps) : 1.0L) / eps;
  }
  long double zeta(long double x) const { return lambda - std::cos(x) - 2.0L * alpha * std::cos(2.0L * x); }
  long double eps(long double x) const { return std::hypot(zeta(x), gamma * std::sin(x)); }

  double magnetization() const {
    long double s = 0.0L;
    for (int k = 0; k < N; ++k) {
      const long double x = 2.0L * std::numbers::pi_v<long double> * k / N;
      s += zeta(x) * weight(eps(x));
    }
    return static_cast<double>(s / N);
  }
  double g(int n) const {
    long double s = 0.0L;
    for (int k = 0; k < N; ++k) {
      const long double x = 2.0L * std::numbers::pi_v<long double> * k / N;
      s += (std::cos(x * n) * zeta(x) + gamma * std::sin(x * n) * std::sin(x)) * weight(eps(x));
    }
    return static_cast<double>(-s / N);
  }
};

inline spincrit::linalg::CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, bool real = false) {
  std::normal_distribution<double> g;
  spincrit::linalg::CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(g(rng), real ? 0.0 : g(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

/// Haar-distributed 2x2 unitary via QR of a complex Gaussian matrix.
inline spincrit::linalg::CMatrix random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Complex a(g(rng), g(rng));
  Complex b(g(rng), g(rng));
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  const Complex phase = std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
  spincrit::linalg::CMatrix u(2, 2);
  u(0, 0) = a;
  u(1, 0) = b;
  u(0, 1) = -std::conj(b) * phase;
  u(1, 1) = std::conj(a) * phase;
  return u;
}

/// |psi><psi| of a 4-component vector (normalized here).
inline spincrit::linalg::HermitianMatrix projector(std::vector<Complex> psi) {
  double norm = 0.0;
  for (const auto& z : psi) norm += std::norm(z);
  norm = std::sqrt(norm);
  const std::size_t n = psi.size();
  spincrit::linalg::CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]) / (norm * norm);
  }
  return spincrit::linalg::HermitianMatrix::from_matrix(m);
}

inline spincrit::linalg::HermitianMatrix bell_phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return projector({s, 0.0, 0.0, s});
}

inline spincrit::linalg::HermitianMatrix maximally_mixed(std::size_t n) {
  return spincrit::linalg::HermitianMatrix::from_matrix(spincrit::linalg::CMatrix::identity(n) *
                                                        Complex(1.0 / static_cast<double>(n)));
}

}  // namespace oracle
