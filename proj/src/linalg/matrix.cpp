#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/linalg.hpp"

namespace spincrit::linalg {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ArgumentError("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ArgumentError(fmt::format("matrix product: {}x{} times {}x{}", a.rows_, a.cols_, b.rows_, b.cols_));
  }
  CMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

namespace {

CMatrix make_pauli(int axis) {
  CMatrix m(2, 2);
  switch (axis) {
    case 0:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 1:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    default:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

}  // namespace

const CMatrix& pauli_x() {
  static const CMatrix m = make_pauli(0);
  return m;
}
const CMatrix& pauli_y() {
  static const CMatrix m = make_pauli(1);
  return m;
}
const CMatrix& pauli_z() {
  static const CMatrix m = make_pauli(2);
  return m;
}

const CMatrix& pauli(int axis) {
  switch (axis) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    case 2: return pauli_z();
    default: throw ArgumentError(fmt::format("pauli: axis {} out of range", axis));
  }
}

double HermitianMatrix::hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("hermiticity_residual: matrix is not square");
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  return r;
}

HermitianMatrix HermitianMatrix::from_matrix(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ArgumentError(fmt::format("HermitianMatrix: {}x{} is not a non-empty square matrix", m.rows(), m.cols()));
  }
  const double residual = hermiticity_residual(m);
  if (!(residual <= tol)) {
    throw ArgumentError(fmt::format("HermitianMatrix: hermiticity residual {:.3g} exceeds {:.3g}", residual, tol));
  }
  CMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(h));
}

bool HermitianMatrix::is_real() const {
  return std::all_of(m_.data().begin(), m_.data().end(), [](const Complex& z) { return z.imag() == 0.0; });
}

CMatrix SpectralDecomposition::apply(const std::vector<double>& transformed) const {
  const std::size_t n = eigenvalues.size();
  if (transformed.size() != n) throw ArgumentError("SpectralDecomposition::apply: size mismatch");
  CMatrix out(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const double w = transformed[m];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = w * eigenvectors(i, m);
      if (vi == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eigenvectors(j, m));
    }
  }
  return out;
}

HermitianMatrix psd_sqrt(const HermitianMatrix& rho, double neg_tol) {
  if (!(neg_tol >= 0.0)) throw ArgumentError("psd_sqrt: neg_tol must be >= 0");
  const auto decomp = eigh(rho);
  double scale = 0.0;
  for (double lambda : decomp.eigenvalues) scale = std::max(scale, std::abs(lambda));
  // Eigenvalues this small are indistinguishable from rounding; their roots
  // would otherwise inject errors of order sqrt(eps).
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  std::vector<double> roots(decomp.eigenvalues.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double lambda = decomp.eigenvalues[i];
    if (lambda < -neg_tol) {
      throw NotPositiveSemidefinite(
          fmt::format("psd_sqrt: eigenvalue {:.6g} below -{:.3g}", lambda, neg_tol), lambda);
    }
    roots[i] = lambda <= noise ? 0.0 : std::sqrt(lambda);
  }
  return HermitianMatrix::from_matrix(decomp.apply(roots), 1e-10);
}

HermitianMatrix partial_trace(const HermitianMatrix& rho, Subsystem keep, std::size_t d_a,
                              std::size_t d_b) {
  if (d_a == 0 || d_b == 0 || rho.dim() != d_a * d_b) {
    throw ArgumentError(
        fmt::format("partial_trace: dimension {} is not {} x {}", rho.dim(), d_a, d_b));
  }
  const CMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    CMatrix out(d_a, d_a);
    for (std::size_t i = 0; i < d_a; ++i) {
      for (std::size_t j = 0; j < d_a; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < d_b; ++k) s += m(i * d_b + k, j * d_b + k);
        out(i, j) = s;
      }
    }
    return HermitianMatrix::from_matrix(out, 1e-10);
  }
  CMatrix out(d_b, d_b);
  for (std::size_t i = 0; i < d_b; ++i) {
    for (std::size_t j = 0; j < d_b; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d_a; ++k) s += m(k * d_b + i, k * d_b + j);
      out(i, j) = s;
    }
  }
  return HermitianMatrix::from_matrix(out, 1e-10);
}

}  // namespace spincrit::linalg
