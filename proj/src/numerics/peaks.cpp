#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "spincrit/errors.hpp"
#include "spincrit/numerics.hpp"

namespace spincrit::numerics {

double default_prominence(std::span<const double> ys) {
  if (ys.empty()) return 0.0;
  std::vector<double> a(ys.size());
  std::transform(ys.begin(), ys.end(), a.begin(), [](double v) { return std::abs(v); });
  const std::size_t mid = a.size() / 2;
  std::nth_element(a.begin(), a.begin() + mid, a.end());
  double median = a[mid];
  if (a.size() % 2 == 0) {
    const double lower = *std::max_element(a.begin(), a.begin() + mid);
    median = 0.5 * (median + lower);
  }
  return 5.0 * median;
}

namespace {

// A jump between two samples lifts the two central differences that straddle
// it by the same amount: a top of two near-equal samples (or a flat run)
// standing clear of the samples just outside it.
bool jump_like(const std::vector<double>& a, std::size_t i, std::size_t j) {
  const double h = a[i];
  std::size_t lo = i;
  std::size_t hi = j;
  if (lo == hi) {
    if (a[i - 1] >= 0.99 * h) {
      --lo;
    } else if (a[j + 1] >= 0.99 * h) {
      ++hi;
    } else {
      return false;
    }
  }
  const double outer_left = lo > 0 ? a[lo - 1] : 0.0;
  const double outer_right = hi + 1 < a.size() ? a[hi + 1] : 0.0;
  return outer_left < 0.5 * h && outer_right < 0.5 * h;
}

}  // namespace

std::vector<PeakReport> find_peaks(const Grid1D& xs, std::span<const double> ys, double prominence) {
  const std::size_t n = xs.size();
  if (ys.size() != n) {
    throw ArgumentError(fmt::format("find_peaks: {} values for a grid of {}", ys.size(), n));
  }
  if (!(prominence >= 0.0)) throw ArgumentError("find_peaks: prominence must be >= 0");

  std::vector<double> a(n);
  std::transform(ys.begin(), ys.end(), a.begin(), [](double v) { return std::abs(v); });

  std::vector<PeakReport> peaks;
  std::size_t i = 1;
  while (i + 1 < n) {
    if (!(a[i] > a[i - 1])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && a[j + 1] == a[i]) ++j;
    if (j + 1 >= n || !(a[j + 1] < a[i])) {
      i = j + 1;
      continue;
    }
    const double h = a[i];

    double left_min = h;
    for (std::size_t k = i; k-- > 0;) {
      if (a[k] > h) break;
      left_min = std::min(left_min, a[k]);
    }
    double right_min = h;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (a[k] > h) break;
      right_min = std::min(right_min, a[k]);
    }

    const double peak_prominence = h - std::max(left_min, right_min);
    if (peak_prominence >= prominence && peak_prominence > 0.0) {
      const std::size_t at = (i + j) / 2;
      peaks.push_back({at, xs[at], h, jump_like(a, i, j) ? PeakKind::discontinuity_candidate : PeakKind::maximum});
    }
    i = j + 1;
  }
  return peaks;
}

}  // namespace spincrit::numerics
