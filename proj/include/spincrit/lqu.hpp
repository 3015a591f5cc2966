#pragma once

// Local quantum uncertainty of a qubit-qubit state: the minimum, over unit
// Pauli observables K = r.sigma on one qubit, of the skew information
// -1/2 tr([sqrt(rho), K]^2). Closed form: 1 - lambda_max(W) with
// W_ij = tr{sqrt(rho) (sigma_i (x) I) sqrt(rho) (sigma_j (x) I)}.

#include <array>

#include "spincrit/linalg.hpp"
#include "spincrit/state_builder.hpp"

namespace spincrit::lqu {

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Unit vector r; |r| = 1 within 1e-12.
class MeasurementDirection {
 public:
  /// Throws ArgumentError unless |(x, y, z)| = 1 within 1e-12.
  MeasurementDirection(double x, double y, double z);

  static MeasurementDirection normalized(double x, double y, double z);
  static MeasurementDirection spherical(double theta, double phi);

  const std::array<double, 3>& r() const noexcept { return r_; }
  double operator[](int i) const { return r_[static_cast<std::size_t>(i)]; }

 private:
  std::array<double, 3> r_;
};

/// Which qubit carries the local observable.
enum class MeasuredSide { first, second };

double skew_information(const linalg::HermitianMatrix& rho, const MeasurementDirection& r,
                        MeasuredSide side = MeasuredSide::first);
double skew_information(const TwoSiteState& s, const MeasurementDirection& r);

Mat3 w_matrix(const linalg::HermitianMatrix& rho, MeasuredSide side = MeasuredSide::first);
Mat3 w_matrix(const TwoSiteState& s);

struct LquResult {
  double u = 0.0;
  double lambda_max = 0.0;
  Mat3 w{};
  MeasurementDirection optimal_r{0.0, 0.0, 1.0};
};

LquResult lqu(const linalg::HermitianMatrix& rho, MeasuredSide side = MeasuredSide::first);
LquResult lqu(const TwoSiteState& s);

/// Direct minimisation of the skew information over a (theta, phi) grid
/// followed by three rounds of local grid refinement (window shrinks by 4
/// each round). Never uses the W matrix.
double lqu_bruteforce(const linalg::HermitianMatrix& rho, int polar_steps, int azimuthal_steps,
                      MeasuredSide side = MeasuredSide::first);
double lqu_bruteforce(const TwoSiteState& s, int polar_steps, int azimuthal_steps);

}  // namespace spincrit::lqu
