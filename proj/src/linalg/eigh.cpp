#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/linalg.hpp"
#include "spincrit/simd/kernels.hpp"

namespace spincrit::linalg {
namespace {

constexpr std::size_t kJacobiMaxDim = 16;
constexpr int kJacobiMaxSweeps = 100;
constexpr int kQlMaxIterations = 60;

// ---------------------------------------------------------------------------
// Cyclic Jacobi on a complex Hermitian matrix. Each pivot first removes the
// phase of a_pq with a diagonal unitary, then applies a real rotation.

void jacobi(CMatrix& a, CMatrix& v, std::vector<double>& w) {
  const std::size_t n = a.rows();
  v = CMatrix::identity(n);

  double scale = 0.0;
  for (const auto& z : a.data()) scale += std::norm(z);
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-17 * scale || off == 0.0) {
      w.resize(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = a(i, i).real();
      return;
    }

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex ph = a(p, q) / mag;
        const Complex phc = std::conj(ph);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A J with J = [[c, s], [-s conj(ph), c conj(ph)]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phc * akq;
          a(k, q) = s * akp + c * phc * akq;
        }
        // A <- J^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * ph * aqk;
          a(q, k) = s * apk + c * ph * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * phc * vkq;
          v(k, q) = s * vkp + c * phc * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
  }
  throw ConvergenceError(fmt::format("eigh: Jacobi did not converge in {} sweeps", kJacobiMaxSweeps));
}

// ---------------------------------------------------------------------------
// Householder reduction to tridiagonal form, generic over real / complex
// storage. The real instantiation goes through the SIMD kernels.

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline double abs2(double x) { return x * x; }
inline double abs2(const Complex& z) { return std::norm(z); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

inline double dot_u(const double* x, const double* y, std::size_t n) {
  return simd::active().dot(x, y, n);
}
inline Complex dot_u(const Complex* x, const Complex* y, std::size_t n) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  simd::active().axpy(a, x, y, n);
}
inline void axpy(const Complex& a, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples i and i + 1; last entry 0
  std::vector<T> q;             // row-major n x n, H_0 H_1 ... D
};

template <typename T>
Tridiagonal<T> tridiagonalize(std::vector<T> a, std::size_t n) {
  std::vector<T> q(n * n, T{});
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = T{1};

  std::vector<T> v(n), vc(n), p(n), u(n), uc(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t off = k + 1;
    const std::size_t m = n - off;
    // Column k below the diagonal, read from row k by Hermiticity.
    double norm2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      v[j] = conj_of(a[k * n + off + j]);
      norm2 += abs2(v[j]);
    }
    const double norm = std::sqrt(norm2);
    double tail2 = norm2 - abs2(v[0]);
    if (norm == 0.0 || tail2 <= std::numeric_limits<double>::min()) continue;

    const double x0mag = std::sqrt(abs2(v[0]));
    const T phase = x0mag > 0.0 ? v[0] / x0mag : T{1};
    const T alpha = -phase * norm;
    v[0] -= alpha;
    const double vnorm = std::sqrt(tail2 + abs2(v[0]));
    for (std::size_t j = 0; j < m; ++j) {
      v[j] /= vnorm;
      vc[j] = conj_of(v[j]);
    }

    // Trailing block S <- H S H with H = I - 2 v v^dagger.
    double kappa = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      p[i] = dot_u(&a[(off + i) * n + off], v.data(), m);
      kappa += real_of(vc[i] * p[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      u[i] = T{2} * p[i] - T{2 * kappa} * v[i];
      uc[i] = conj_of(u[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      T* row = &a[(off + i) * n + off];
      axpy(-v[i], uc.data(), row, m);
      axpy(-u[i], vc.data(), row, m);
    }
    a[off * n + k] = alpha;
    a[k * n + off] = conj_of(alpha);
    for (std::size_t j = 1; j < m; ++j) {
      a[(off + j) * n + k] = T{};
      a[k * n + off + j] = T{};
    }

    // Q <- Q H. Row 0 of Q stays e_0; every other row can carry weight on
    // the trailing columns.
    for (std::size_t r = 1; r < n; ++r) {
      T* row = &q[r * n + off];
      const T t = dot_u(row, v.data(), m);
      axpy(T{-2} * t, vc.data(), row, m);
    }
  }

  Tridiagonal<T> out;
  out.diag.resize(n);
  out.offdiag.assign(n, 0.0);
  std::vector<T> phase(n, T{1});
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = real_of(a[i * n + i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const T e = a[(i + 1) * n + i];
    const double mag = std::sqrt(abs2(e));
    out.offdiag[i] = mag;
    phase[i + 1] = mag > 0.0 ? phase[i] * (e / mag) : phase[i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) q[r * n + j] *= phase[j];
  }
  out.q = std::move(q);
  return out;
}

// Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal
// matrix. `zt` holds eigenvectors as rows so each rotation touches two
// contiguous rows.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& zt,
                    std::size_t n) {
  const auto& kernels = simd::active();
  const int ni = static_cast<int>(n);
  for (int l = 0; l < ni; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < ni - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == kQlMaxIterations) {
          throw ConvergenceError("eigh: tridiagonal QL did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          kernels.rotate(&zt[static_cast<std::size_t>(i) * n], &zt[static_cast<std::size_t>(i + 1) * n], n, c, s);
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

template <typename T>
void householder_ql(std::vector<T> a, std::size_t n, CMatrix& v, std::vector<double>& w) {
  auto tri = tridiagonalize(std::move(a), n);
  std::vector<double> zt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) zt[i * n + i] = 1.0;
  tridiagonal_ql(tri.diag, tri.offdiag, zt, n);

  w = tri.diag;
  v = CMatrix(n, n);
  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t r = 0; r < n; ++r) {
      const double* qrow = &tri.q[r * n];
      for (std::size_t m = 0; m < n; ++m) v(r, m) = dot_u(qrow, &zt[m * n], n);
    }
  } else {
    std::vector<double> re(n), im(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        re[j] = tri.q[r * n + j].real();
        im[j] = tri.q[r * n + j].imag();
      }
      for (std::size_t m = 0; m < n; ++m) {
        v(r, m) = Complex(dot_u(re.data(), &zt[m * n], n), dot_u(im.data(), &zt[m * n], n));
      }
    }
  }
}

void sort_and_normalize(std::vector<double>& w, CMatrix& v) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });

  std::vector<double> ws(n);
  CMatrix vs(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t src = order[m];
    ws[m] = w[src];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(v(i, src));
    const double inv = 1.0 / std::sqrt(norm2);
    Complex phase = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, src)) * inv;
      if (mag > 1e-10) {
        phase = std::conj(v(i, src)) / std::abs(v(i, src));
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) vs(i, m) = v(i, src) * phase * inv;
  }
  w = std::move(ws);
  v = std::move(vs);
}

}  // namespace

SpectralDecomposition eigh(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  SpectralDecomposition out;
  if (n <= kJacobiMaxDim) {
    CMatrix a = h.matrix();
    jacobi(a, out.eigenvectors, out.eigenvalues);
  } else if (h.is_real()) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = h(i, j).real();
    }
    householder_ql(std::move(a), n, out.eigenvectors, out.eigenvalues);
  } else {
    std::vector<Complex> a(h.matrix().data().begin(), h.matrix().data().end());
    householder_ql(std::move(a), n, out.eigenvectors, out.eigenvalues);
  }
  sort_and_normalize(out.eigenvalues, out.eigenvectors);
  return out;
}

}  // namespace spincrit::linalg
