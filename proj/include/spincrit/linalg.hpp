#pragma once

// Small dense complex linear algebra: two-qubit density matrices (4x4) up to
// exact-diagonalization sizes (2^10 x 2^10).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spincrit::linalg {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double max_abs_diff(const CMatrix& other) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Pauli matrices in the basis {|0>, |1>} with sigma_z|0> = +|0>.
const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
/// 0 -> x, 1 -> y, 2 -> z.
const CMatrix& pauli(int axis);

/// Square matrix equal to its conjugate transpose.
class HermitianMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  /// Validates |m(i,j) - conj(m(j,i))| <= tol and then stores the exactly
  /// Hermitian part (m + m^dagger) / 2. Throws ArgumentError otherwise.
  static HermitianMatrix from_matrix(const CMatrix& m, double tol = kDefaultTolerance);

  /// Largest |m(i,j) - conj(m(j,i))| of an arbitrary square matrix.
  static double hermiticity_residual(const CMatrix& m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  bool is_real() const;

 private:
  explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Eigenvalues ascending; eigenvectors are the columns of `eigenvectors`,
/// each scaled so its first component with modulus above 1e-10 is real
/// and positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;

  /// V f(diag) V^dagger.
  CMatrix apply(const std::vector<double>& transformed) const;
};

/// Cyclic Jacobi up to dimension 16; Householder tridiagonalisation followed
/// by implicit QL above that (real arithmetic when the input is real).
SpectralDecomposition eigh(const HermitianMatrix& h);

/// Sum of sqrt(lambda_i) v_i v_i^dagger. Eigenvalues in [-neg_tol, 0) and
/// those within 64 eps of zero relative to the largest are treated as zero;
/// anything below -neg_tol throws NotPositiveSemidefinite.
HermitianMatrix psd_sqrt(const HermitianMatrix& rho, double neg_tol = 1e-10);

enum class Subsystem { A, B };

/// Reduced state of a (d_a * d_b)-dimensional operator, keeping `keep`.
HermitianMatrix partial_trace(const HermitianMatrix& rho, Subsystem keep, std::size_t d_a,
                              std::size_t d_b);

}  // namespace spincrit::linalg
