#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "spincrit/errors.hpp"
#include "spincrit/lqu.hpp"
#include "spincrit/random_states.hpp"
#include "spincrit/state_builder.hpp"

using namespace spincrit;
using namespace spincrit::linalg;
using namespace spincrit::lqu;

namespace {

CorrelatorSet set(double s, double xx, double yy, double zz) { return {1, s, xx, yy, zz}; }

HermitianMatrix product00() { return oracle::projector({1.0, 0.0, 0.0, 0.0}); }

double max_abs(const Mat3& w, const Mat3& ref) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(w[i][j] - ref[i][j]));
  }
  return m;
}

HermitianMatrix conjugate(const HermitianMatrix& rho, const CMatrix& u) {
  return HermitianMatrix::from_matrix(u * rho.matrix() * u.adjoint(), 1e-10);
}

}  // namespace

TEST_CASE("build_rho") {
  SUBCASE("polarized product") {
    const auto s = build_rho(set(-1.0, 0.0, 0.0, 1.0));
    CHECK(s.matrix.matrix().max_abs_diff(oracle::projector({0.0, 0.0, 0.0, 1.0}).matrix()) < 1e-15);
  }
  SUBCASE("maximally mixed") {
    CHECK(build_rho(set(0, 0, 0, 0)).matrix.matrix().max_abs_diff(oracle::maximally_mixed(4).matrix()) < 1e-15);
  }
  SUBCASE("Bell") {
    const auto s = build_rho(set(0.0, 1.0, -1.0, 1.0));
    CHECK(s.matrix.matrix().max_abs_diff(oracle::bell_phi_plus().matrix()) < 1e-15);
  }
  SUBCASE("Pauli expansion") {
    // tr(rho P) returns each correlator.
    const CorrelatorSet c = set(0.2, 0.3, -0.1, 0.15);
    const auto rho = build_rho(c).matrix.matrix();
    const CMatrix id = CMatrix::identity(2);
    CHECK((rho * kron(pauli_z(), id)).trace().real() == doctest::Approx(c.sig_z));
    CHECK((rho * kron(id, pauli_z())).trace().real() == doctest::Approx(c.sig_z));
    CHECK((rho * kron(pauli_x(), pauli_x())).trace().real() == doctest::Approx(c.xx));
    CHECK((rho * kron(pauli_y(), pauli_y())).trace().real() == doctest::Approx(c.yy));
    CHECK((rho * kron(pauli_z(), pauli_z())).trace().real() == doctest::Approx(c.zz));
  }
  SUBCASE("invalid correlators") {
    CHECK_THROWS_AS(build_rho(set(0.0, 1.0, 1.0, 1.0)), InvalidCorrelators);
    try {
      build_rho(set(0.0, 1.0, 1.0, 1.0));
    } catch (const InvalidCorrelators& e) {
      CHECK(e.min_eigenvalue() < -0.1);
    }
  }
}

TEST_CASE("state_diagnostics") {
  const auto mixed = state_diagnostics(build_rho(set(0, 0, 0, 0)));
  CHECK(mixed.trace_deviation == doctest::Approx(0.0));
  CHECK(mixed.min_eigenvalue == doctest::Approx(0.25));
  CHECK(mixed.x_structure_residual == 0.0);

  const auto bell = state_diagnostics(build_rho(set(0.0, 1.0, -1.0, 1.0)));
  CHECK(std::abs(bell.min_eigenvalue) < 1e-15);

  CMatrix m = oracle::maximally_mixed(4).matrix();
  m(0, 0) += 1e-6;
  m(0, 1) = 0.01;
  m(1, 0) = 0.01;
  const TwoSiteState injected{HermitianMatrix::from_matrix(m), {}};
  const auto d = state_diagnostics(injected);
  CHECK(d.trace_deviation == doctest::Approx(1e-6).epsilon(1e-6));
  CHECK(d.x_structure_residual == doctest::Approx(0.01));
}

TEST_CASE("skew information") {
  const auto z = MeasurementDirection(0.0, 0.0, 1.0);
  const auto x = MeasurementDirection(1.0, 0.0, 0.0);
  CHECK(std::abs(skew_information(product00(), z)) < 1e-15);
  CHECK(skew_information(product00(), x) == doctest::Approx(1.0));
  CHECK(std::abs(skew_information(oracle::maximally_mixed(4), MeasurementDirection::spherical(0.4, 1.1))) < 1e-15);
  CHECK_THROWS_AS(MeasurementDirection(1.0, 1.0, 0.0), ArgumentError);
  CHECK_THROWS_AS(skew_information(oracle::maximally_mixed(2), z), ArgumentError);
}

TEST_CASE("pure states: skew information is the variance") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  const CMatrix id = CMatrix::identity(2);
  for (int t = 0; t < 20; ++t) {
    const auto rho = oracle::projector({{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}});
    const auto r = MeasurementDirection::normalized(g(rng), g(rng), g(rng));
    CMatrix k = pauli_x() * Complex(r[0]) + pauli_y() * Complex(r[1]) + pauli_z() * Complex(r[2]);
    const double mean = (rho.matrix() * kron(k, id)).trace().real();
    CHECK(skew_information(rho, r) == doctest::Approx(1.0 - mean * mean).epsilon(1e-12));
  }
}

TEST_CASE("W matrix") {
  const Mat3 identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(max_abs(w_matrix(oracle::maximally_mixed(4)), identity) < 1e-14);
  const Mat3 zz{{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
  CHECK(max_abs(w_matrix(product00()), zz) < 1e-14);
  CHECK(max_abs(w_matrix(oracle::bell_phi_plus()), Mat3{}) < 1e-14);
}

TEST_CASE("lqu closed form") {
  CHECK(std::abs(lqu::lqu(oracle::bell_phi_plus()).u - 1.0) <= 1e-12);
  CHECK(std::abs(lqu::lqu(product00()).u) <= 1e-12);
  CHECK(std::abs(lqu::lqu(oracle::maximally_mixed(4)).u) <= 1e-12);

  SUBCASE("Werner state against brute force") {
    CMatrix w = oracle::bell_phi_plus().matrix() * Complex(0.5) + oracle::maximally_mixed(4).matrix() * Complex(0.5);
    const auto rho = HermitianMatrix::from_matrix(w);
    CHECK(std::abs(lqu::lqu(rho).u - lqu_bruteforce(rho, 128, 128)) <= 1e-6);
  }
  SUBCASE("optimal direction attains the minimum") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
      const auto rho = states::random_mixed_state(rng);
      const auto res = lqu::lqu(rho);
      CHECK(skew_information(rho, res.optimal_r) == doctest::Approx(res.u).epsilon(1e-10));
    }
  }
  SUBCASE("measured side") {
    // Product of a pure and a mixed qubit: measuring the pure side costs nothing.
    const std::vector<double> d{1.0, 0.0};
    const auto rho = HermitianMatrix::from_matrix(kron(CMatrix::diagonal(d), CMatrix::identity(2) * Complex(0.5)));
    CHECK(std::abs(lqu::lqu(rho, MeasuredSide::first).u) <= 1e-12);
    CHECK(std::abs(lqu::lqu(rho, MeasuredSide::second).u) <= 1e-12);
  }
}

TEST_CASE("lqu is invariant under local unitaries") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto rho = t % 2 == 0 ? states::random_mixed_state(rng) : states::random_x_state(rng);
    const CMatrix u = kron(oracle::random_unitary2(rng), oracle::random_unitary2(rng));
    CHECK(lqu::lqu(conjugate(rho, u)).u == doctest::Approx(lqu::lqu(rho).u).epsilon(1e-10));
  }
}

TEST_CASE("lqu lies in [0, 1] and is symmetric for symmetric states") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const auto rho = states::random_mixed_state(rng);
    const double u = lqu::lqu(rho).u;
    CHECK(u >= 0.0);
    CHECK(u <= 1.0);
  }
  // X-states from translation-invariant correlators are symmetric under swap.
  const auto s = build_rho(set(0.3, 0.4, 0.1, 0.2));
  CHECK(lqu::lqu(s.matrix, MeasuredSide::first).u == doctest::Approx(lqu::lqu(s.matrix, MeasuredSide::second).u));
}

TEST_CASE("brute force") {
  CHECK(std::abs(lqu_bruteforce(oracle::maximally_mixed(4), 8, 8)) < 1e-15);
  CHECK(lqu_bruteforce(oracle::bell_phi_plus(), 8, 8) == doctest::Approx(1.0));
  CHECK_THROWS_AS(lqu_bruteforce(oracle::maximally_mixed(4), 1, 8), ArgumentError);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 5; ++t) {
    const auto rho = states::random_x_state(rng);
    CHECK(std::abs(lqu_bruteforce(rho, 256, 256) - lqu::lqu(rho).u) <= 1e-6);
  }
}

TEST_CASE("random states are valid") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 30; ++t) {
    for (const auto& rho : {states::random_x_state(rng), states::random_mixed_state(rng)}) {
      CHECK(rho.trace() == doctest::Approx(1.0));
      CHECK(eigh(rho).eigenvalues.front() >= -1e-12);
    }
  }
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  CHECK(states::random_mixed_state(a).matrix().max_abs_diff(states::random_mixed_state(b).matrix()) == 0.0);
}
