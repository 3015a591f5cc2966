#include "spincrit/lqu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "spincrit/errors.hpp"

namespace spincrit::lqu {

using linalg::CMatrix;
using linalg::Complex;
using linalg::HermitianMatrix;

MeasurementDirection::MeasurementDirection(double x, double y, double z) : r_{x, y, z} {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw ArgumentError(fmt::format("MeasurementDirection: |r| = {} is not 1", norm));
  }
}

MeasurementDirection MeasurementDirection::normalized(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0)) throw ArgumentError("MeasurementDirection: zero vector");
  return {x / norm, y / norm, z / norm};
}

MeasurementDirection MeasurementDirection::spherical(double theta, double phi) {
  return normalized(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

namespace {

void require_two_qubits(const HermitianMatrix& rho) {
  if (rho.dim() != 4) throw ArgumentError(fmt::format("LQU: expected a 4x4 state, got {}x{}", rho.dim(), rho.dim()));
}

CMatrix local_operator(const CMatrix& op, MeasuredSide side) {
  const CMatrix id = CMatrix::identity(2);
  return side == MeasuredSide::first ? linalg::kron(op, id) : linalg::kron(id, op);
}

using Mat4 = std::array<Complex, 16>;

Mat4 to_mat4(const CMatrix& m) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i * 4 + j] = m(i, j);
  }
  return out;
}

// (r.sigma) (x) I or I (x) (r.sigma), filled directly.
Mat4 observable4(const MeasurementDirection& r, MeasuredSide side) {
  const std::array<Complex, 4> k2{Complex(r[2]), Complex(r[0], -r[1]), Complex(r[0], r[1]), Complex(-r[2])};
  Mat4 k{};
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      for (int a = 0; a < 2; ++a) {
        if (side == MeasuredSide::first) {
          k[(2 * p + a) * 4 + (2 * q + a)] = k2[2 * p + q];
        } else {
          k[(2 * a + p) * 4 + (2 * a + q)] = k2[2 * p + q];
        }
      }
    }
  }
  return k;
}

// -1/2 tr(C^2) with C = [A, K].
double skew_from_root(const Mat4& root, const Mat4& k) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex v = 0.0;
      for (int l = 0; l < 4; ++l) v += root[i * 4 + l] * k[l * 4 + j] - k[i * 4 + l] * root[l * 4 + j];
      c[i * 4 + j] = v;
    }
  }
  Complex t = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t += c[i * 4 + j] * c[j * 4 + i];
  }
  return -0.5 * t.real();
}

Mat3 w_from_root(const CMatrix& root, MeasuredSide side) {
  std::array<CMatrix, 3> b;
  for (int i = 0; i < 3; ++i) b[i] = root * local_operator(linalg::pauli(i), side);
  Mat3 w{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double v = (b[i] * b[j]).trace().real();
      w[i][j] = v;
      w[j][i] = v;
    }
  }
  return w;
}

CMatrix root_of(const HermitianMatrix& rho) {
  require_two_qubits(rho);
  return linalg::psd_sqrt(rho, kStateNegTol).matrix();
}

}  // namespace

double skew_information(const HermitianMatrix& rho, const MeasurementDirection& r, MeasuredSide side) {
  return skew_from_root(to_mat4(root_of(rho)), observable4(r, side));
}

double skew_information(const TwoSiteState& s, const MeasurementDirection& r) {
  return skew_information(s.matrix, r);
}

Mat3 w_matrix(const HermitianMatrix& rho, MeasuredSide side) { return w_from_root(root_of(rho), side); }

Mat3 w_matrix(const TwoSiteState& s) { return w_matrix(s.matrix); }

LquResult lqu(const HermitianMatrix& rho, MeasuredSide side) {
  LquResult out;
  out.w = w_matrix(rho, side);

  CMatrix wm(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) wm(i, j) = out.w[i][j];
  }
  const auto decomp = linalg::eigh(HermitianMatrix::from_matrix(wm, 1e-10));
  out.lambda_max = decomp.eigenvalues.back();
  out.u = std::clamp(1.0 - out.lambda_max, 0.0, 1.0);
  // Eigenvectors of a real symmetric matrix come back real after phase fixing.
  out.optimal_r = MeasurementDirection::normalized(decomp.eigenvectors(0, 2).real(),
                                                   decomp.eigenvectors(1, 2).real(),
                                                   decomp.eigenvectors(2, 2).real());
  return out;
}

LquResult lqu(const TwoSiteState& s) { return lqu(s.matrix); }

double lqu_bruteforce(const HermitianMatrix& rho, int polar_steps, int azimuthal_steps, MeasuredSide side) {
  if (polar_steps < 2 || azimuthal_steps < 1) {
    throw ArgumentError("lqu_bruteforce: need polar_steps >= 2 and azimuthal_steps >= 1");
  }
  constexpr double pi = std::numbers::pi;
  const Mat4 root = to_mat4(root_of(rho));
  const auto eval = [&](double theta, double phi) {
    return skew_from_root(root, observable4(MeasurementDirection::spherical(theta, phi), side));
  };

  // Global scan; strict '<' keeps the lowest theta, then lowest phi, on ties.
  const double dtheta = pi / (polar_steps - 1);
  const double dphi = 2.0 * pi / azimuthal_steps;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < polar_steps; ++i) {
    for (int j = 0; j < azimuthal_steps; ++j) {
      const double v = eval(i * dtheta, j * dphi);
      if (v < best) {
        best = v;
        best_theta = i * dtheta;
        best_phi = j * dphi;
      }
    }
  }

  constexpr int kRounds = 3;
  constexpr int kHalf = 8;
  double half_theta = dtheta;
  double half_phi = dphi;
  for (int round = 0; round < kRounds; ++round) {
    const double ct = best_theta;
    const double cp = best_phi;
    for (int i = -kHalf; i <= kHalf; ++i) {
      const double theta = std::clamp(ct + half_theta * i / kHalf, 0.0, pi);
      for (int j = -kHalf; j <= kHalf; ++j) {
        const double phi = cp + half_phi * j / kHalf;
        const double v = eval(theta, phi);
        if (v < best) {
          best = v;
          best_theta = theta;
          best_phi = phi;
        }
      }
    }
    half_theta /= 4.0;
    half_phi /= 4.0;
  }
  return best;
}

double lqu_bruteforce(const TwoSiteState& s, int polar_steps, int azimuthal_steps) {
  return lqu_bruteforce(s.matrix, polar_steps, azimuthal_steps);
}

}  // namespace spincrit::lqu
