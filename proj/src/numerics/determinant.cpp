#include <cmath>
#include <utility>

#include "spincrit/errors.hpp"
#include "spincrit/numerics.hpp"

namespace spincrit::numerics {

double determinant(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw ArgumentError("determinant: size mismatch");
  if (n == 0) return 1.0;

  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a[r * n + k]) > best) {
        best = std::abs(a[r * n + k]);
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      det = -det;
    }
    const double pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double m = a[r * n + k] / pivot;
      if (m == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= m * a[k * n + c];
    }
  }
  return det;
}

double shifted_toeplitz_det(const std::function<double(int)>& gen, int n, int shift) {
  if (n < 1) throw ArgumentError("shifted_toeplitz_det: n must be >= 1");
  if (n == 1) return gen(shift);

  const auto dim = static_cast<std::size_t>(n);
  std::vector<double> a(dim * dim);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a[(i - 1) * dim + (j - 1)] = gen(i - j + shift);
  }
  return determinant(std::move(a), dim);
}

}  // namespace spincrit::numerics
