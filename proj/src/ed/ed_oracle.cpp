#include "spincrit/ed_oracle.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "spincrit/errors.hpp"

namespace spincrit::ed {

using linalg::CMatrix;
using linalg::Complex;
using linalg::HermitianMatrix;

namespace {

enum class Axis { x, y, z };

struct Factor {
  int site;
  Axis axis;
};

// Applies a Pauli string (rightmost factor first) to basis state `s`;
// returns the image state and its amplitude.
std::pair<std::uint32_t, Complex> apply(std::initializer_list<Factor> factors, std::uint32_t s, int n_sites) {
  Complex amp = 1.0;
  for (auto it = std::rbegin(factors); it != std::rend(factors); ++it) {
    const int shift = n_sites - 1 - it->site;
    const bool up = ((s >> shift) & 1u) == 0u;
    switch (it->axis) {
      case Axis::x:
        s ^= 1u << shift;
        break;
      case Axis::y:
        amp *= up ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
        s ^= 1u << shift;
        break;
      case Axis::z:
        if (!up) amp = -amp;
        break;
    }
  }
  return {s, amp};
}

void check_sites(int N) {
  if (N < 2 || N > kMaxSites) throw ArgumentError(fmt::format("ED: N = {} outside [2, {}]", N, kMaxSites));
}

}  // namespace

DenseHamiltonian build_hamiltonian(Model model, const xyt::XYTParams& p) {
  check_sites(p.N);
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) throw ArgumentError("ED: gamma outside [0, 1]");
  if (!std::isfinite(p.lambda) || !std::isfinite(p.alpha)) throw ArgumentError("ED: parameters must be finite");

  const int n = p.N;
  const double alpha = model == Model::xy ? 0.0 : p.alpha;
  const std::size_t dim = std::size_t{1} << n;
  CMatrix h(dim, dim);

  const auto add = [&](double coef, std::initializer_list<Factor> factors) {
    if (coef == 0.0) return;
    for (std::uint32_t s = 0; s < dim; ++s) {
      const auto [t, amp] = apply(factors, s, n);
      h(t, s) += -0.5 * coef * amp;
    }
  };

  for (int j = 0; j < n; ++j) {
    const int next = (j + 1) % n;
    const int prev = (j + n - 1) % n;
    add(1.0 + p.gamma, {{j, Axis::x}, {next, Axis::x}});
    add(1.0 - p.gamma, {{j, Axis::y}, {next, Axis::y}});
    add(p.lambda, {{j, Axis::z}});
    add(alpha, {{prev, Axis::x}, {next, Axis::x}, {j, Axis::z}});
    add(alpha, {{prev, Axis::y}, {next, Axis::y}, {j, Axis::z}});
  }

  // Both Hamiltonians are real in this basis.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (std::abs(h(i, k).imag()) > 1e-12) {
        throw ConvergenceError("ED: Hamiltonian acquired an imaginary entry");
      }
      h(i, k) = h(i, k).real();
    }
  }

  DenseHamiltonian out{n, model, p, HermitianMatrix::from_matrix(h)};
  out.params.alpha = alpha;
  return out;
}

HermitianMatrix thermal_state(const DenseHamiltonian& h, const Temperature& t) {
  const auto decomp = linalg::eigh(h.matrix);
  const double e0 = decomp.eigenvalues.front();
  std::vector<double> weights(decomp.eigenvalues.size(), 0.0);
  double z = 0.0;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    const double de = decomp.eigenvalues[m] - e0;
    const double w = t.is_zero() ? (de <= 1e-10 ? 1.0 : 0.0) : std::exp(-t.beta() * de);
    weights[m] = w;
    z += w;
  }
  for (auto& w : weights) {
    w /= z;
    if (w < 1e-300) w = 0.0;
  }
  return HermitianMatrix::from_matrix(decomp.apply(weights), 1e-10);
}

CorrelatorSet ed_correlators(const HermitianMatrix& state, int N, int i, int j) {
  check_sites(N);
  if (state.dim() != (std::size_t{1} << N)) {
    throw ArgumentError(fmt::format("ed_correlators: state dimension {} is not 2^{}", state.dim(), N));
  }
  if (!(0 <= i && i < j && j < N)) {
    throw ArgumentError(fmt::format("ed_correlators: need 0 <= i < j < N, got i={}, j={}, N={}", i, j, N));
  }
  const auto expect = [&](std::initializer_list<Factor> factors) {
    double acc = 0.0;
    for (std::uint32_t s = 0; s < state.dim(); ++s) {
      const auto [t, amp] = apply(factors, s, N);
      acc += (state(s, t) * amp).real();
    }
    return acc;
  };

  CorrelatorSet c;
  c.n = j - i;
  c.sig_z = 0.5 * (expect({{i, Axis::z}}) + expect({{j, Axis::z}}));
  c.xx = expect({{i, Axis::x}, {j, Axis::x}});
  c.yy = expect({{i, Axis::y}, {j, Axis::y}});
  c.zz = expect({{i, Axis::z}, {j, Axis::z}});
  return c;
}

xyt::XYTParams ring_params_for(const xyt::XYTParams& analytic) {
  xyt::XYTParams ring = analytic;
  ring.lambda = 2.0 * analytic.lambda;
  ring.alpha = 2.0 * analytic.alpha;
  return ring;
}

xyt::XYTParams ring_params_for(const xy::XYParams& analytic, int N) {
  if (!(analytic.lambda > 0.0)) throw ArgumentError("ring_params_for: XY lambda must be > 0");
  xyt::XYTParams ring;
  ring.gamma = analytic.gamma;
  ring.lambda = -2.0 / analytic.lambda;
  ring.alpha = 0.0;
  ring.N = N;
  ring.temperature = analytic.temperature.is_zero()
                         ? Temperature::zero()
                         : Temperature::inverse(analytic.temperature.beta() * analytic.lambda / 2.0);
  return ring;
}

}  // namespace spincrit::ed
