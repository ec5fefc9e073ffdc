#include "doctest.h"

#include "oracles.hpp"
#include "qgeo/error.hpp"
#include "qgeo/states.hpp"

using namespace qgeo;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected qgeo::Error");
  return ErrorKind::Validation;
}

}  // namespace

TEST_CASE("projector of basis and superposition states") {
  Vector e0(2);
  e0 << 1.0, 0.0;
  CHECK(max_abs(projector(PureState(e0)).mat() - diag2(1, 0)) == 0.0);

  Vector z(2);
  z << 1.0, kI;
  const Matrix p = projector(PureState::normalized(z)).mat();
  Matrix expected(2, 2);
  expected << 0.5, -0.5 * kI, 0.5 * kI, 0.5;
  CHECK(max_abs(p - expected) < 1e-15);
}

TEST_CASE("projector is idempotent with unit trace for random N=4 states") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = PureState::normalized(oracle::random_vector(rng, 4));
    const Matrix p = projector(z).mat();
    CHECK(max_abs(p * p - p) < 1e-12);
    CHECK(std::abs(p.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("PureState rejects non-unit representatives") {
  Vector z(2);
  z << 1.0, 1.0;
  CHECK(kind_of([&] { PureState s(z); }) == ErrorKind::Validation);
}

TEST_CASE("thermal_state limits and closed form") {
  const Matrix h = diag2(0, 1);
  CHECK(max_abs(thermal_state(h, 1e9).mat() - Matrix::Identity(2, 2) / 2.0) < 1e-8);
  CHECK(max_abs(thermal_state(h, 1e-3).mat() - diag2(1, 0)) < 1e-8);

  const double z = 1.0 + std::exp(-1.0);
  CHECK(max_abs(thermal_state(h, 1.0).mat() - diag2(1.0 / z, std::exp(-1.0) / z)) < 1e-15);
}

TEST_CASE("thermal_state errors") {
  CHECK(kind_of([] { thermal_state(diag2(0, 1), 0.0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { thermal_state(diag2(0, 1), -1.0); }) == ErrorKind::Domain);
  Matrix h = diag2(0, 1);
  h(0, 1) = 1.0;
  CHECK(kind_of([&] { thermal_state(h, 1.0); }) == ErrorKind::Validation);
}

TEST_CASE("thermal_state does not overflow at tiny temperature") {
  const Matrix h = diag2(-50, 50);
  const Matrix rho = thermal_state(h, 1e-4).mat();
  CHECK(rho.allFinite());
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("property: thermal states commute with H, are full rank and Boltzmann ordered") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const Matrix h = oracle::random_hermitian(rng, n);
    const double t = rng.uniform(0.3, 5.0);
    const DensityMatrix rho = thermal_state(h, t);
    CHECK(hs_norm(commutator(rho.mat(), h)) <= 1e-10);
    CHECK(rank_stratum(rho).is_maximal);
    // Lowest energy gets the largest weight.
    const auto eh = eigh(h);
    const Vector g = eh.vectors.col(0);
    const double w0 = (g.adjoint() * rho.mat() * g)(0, 0).real();
    CHECK(w0 == doctest::Approx(rho.eigenvalues().maxCoeff()).epsilon(1e-12));
  }
}

TEST_CASE("maximally_mixed") {
  CHECK(max_abs(maximally_mixed(2).mat() - diag2(0.5, 0.5)) == 0.0);
  const RealVector ev = maximally_mixed(3).eigenvalues();
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(ev[i] == doctest::Approx(1.0 / 3.0));
  for (Eigen::Index n = 2; n <= 6; ++n) {
    const auto s = rank_stratum(maximally_mixed(n));
    CHECK(s.rank == n);
    CHECK(s.is_max_disorder);
  }
  CHECK(kind_of([] { maximally_mixed(1); }) == ErrorKind::Domain);
}

TEST_CASE("polar_decompose") {
  const Matrix id = Matrix::Identity(3, 3);
  auto p = polar_decompose(id);
  CHECK(max_abs(p.positive - id) < 1e-14);
  CHECK(max_abs(p.unitary - id) < 1e-14);

  oracle::Rng rng(3);
  const Matrix u = oracle::random_unitary(rng, 3);
  p = polar_decompose(u);
  CHECK(max_abs(p.positive - id) < 1e-12);
  CHECK(max_abs(p.unitary - u) < 1e-12);

  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = oracle::ginibre(rng, 3);
    const auto d = polar_decompose(m);
    CHECK(max_abs(d.positive * d.unitary - m) <= 1e-10);
    CHECK(max_abs(d.positive * d.positive - m * m.adjoint()) <= 1e-10);
    CHECK(is_hermitian(d.positive));
    CHECK(is_unitary(d.unitary));
  }

  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK(kind_of([&] { polar_decompose(singular); }) == ErrorKind::Stratum);
}

TEST_CASE("canonical_amplitude") {
  const auto m = canonical_amplitude(maximally_mixed(2));
  CHECK(max_abs(m.mat() - Matrix::Identity(2, 2) / std::sqrt(2.0)) < 1e-15);
  CHECK(m.normalized());

  const auto m2 = canonical_amplitude(DensityMatrix(diag2(0.75, 0.25)));
  CHECK(max_abs(m2.mat() - diag2(std::sqrt(3.0) / 2.0, 0.5)) < 1e-15);

  oracle::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho(oracle::random_density(rng, 4));
    const auto a = canonical_amplitude(rho);
    CHECK(is_hermitian(a.mat()));
    CHECK(max_abs(a.mat() * a.mat() - rho.mat()) <= 1e-10);
    CHECK(max_abs(a.mat() * a.mat().adjoint() - rho.mat()) <= 1e-10);
  }

  CHECK(kind_of([] { canonical_amplitude(DensityMatrix(diag2(1, 0))); }) == ErrorKind::Stratum);
}

TEST_CASE("property: gauge freedom M -> MU leaves M M^dagger unchanged") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const Matrix m = oracle::ginibre(rng, n);
    const Matrix u = oracle::random_unitary(rng, n);
    const Matrix mu = m * u;
    CHECK(max_abs(mu * mu.adjoint() - m * m.adjoint()) <= 1e-12 * std::max(1.0, max_abs(m * m.adjoint())));
  }
}

TEST_CASE("rank_stratum") {
  auto s = rank_stratum(DensityMatrix(diag2(1, 0)));
  CHECK(s.rank == 1);
  CHECK(s.is_pure);
  CHECK_FALSE(s.is_maximal);

  s = rank_stratum(maximally_mixed(2));
  CHECK(s.rank == 2);
  CHECK(s.is_max_disorder);

  s = rank_stratum(DensityMatrix(diag2(0.9, 0.1)));
  CHECK(s.rank == 2);
  CHECK(s.is_maximal);
  CHECK_FALSE(s.is_max_disorder);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.9));
}

TEST_CASE("hs_inner") {
  CHECK(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == cplx(2.0, 0.0));
  CHECK(std::abs(hs_inner(pauli::x(), pauli::y())) == 0.0);
  CHECK_THROWS_AS(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Error);
}

TEST_CASE("property: hs_inner is conjugate symmetric and linear in the second slot") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const Matrix a = oracle::ginibre(rng, n);
    const Matrix b = oracle::ginibre(rng, n);
    const Matrix c = oracle::ginibre(rng, n);
    const cplx alpha(rng.normal(), rng.normal());
    const cplx beta(rng.normal(), rng.normal());
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
    CHECK(std::abs(hs_inner(a, alpha * b + beta * c) -
                   (alpha * hs_inner(a, b) + beta * hs_inner(a, c))) < 1e-11);
    CHECK(std::abs(hs_inner(a, a).imag()) < 1e-12);
    CHECK(hs_inner(a, a).real() >= 0.0);
  }
}

TEST_CASE("bures_distance closed forms") {
  const DensityMatrix up(diag2(1, 0));
  const DensityMatrix down(diag2(0, 1));
  CHECK(bures_distance(up, up) == doctest::Approx(0.0));
  CHECK(bures_distance(up, down) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // Fidelity root of |0><0| and I/2 is sqrt(1/2).
  CHECK(bures_distance(up, maximally_mixed(2)) ==
        doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-14));
}

TEST_CASE("property: bures distance is a metric on random 2x2 and 3x3 states") {
  oracle::Rng rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = trial % 2 == 0 ? 2 : 3;
    const DensityMatrix a(oracle::random_density(rng, n, 0.0));
    const DensityMatrix b(oracle::random_density(rng, n, 0.0));
    const DensityMatrix c(oracle::random_density(rng, n, 0.0));
    const double ab = bures_distance(a, b);
    CHECK(ab == doctest::Approx(bures_distance(b, a)).epsilon(1e-9));
    CHECK(ab <= std::sqrt(2.0) + 1e-12);
    CHECK(ab <= bures_distance(a, c) + bures_distance(c, b) + 1e-9);
    CHECK(bures_distance(a, a) < 1e-6);
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK(kind_of([] { DensityMatrix d(diag2(0.6, 0.6)); }) == ErrorKind::Validation);
  CHECK(kind_of([] { DensityMatrix d(diag2(1.5, -0.5)); }) == ErrorKind::Validation);
  Matrix m = diag2(0.5, 0.5);
  m(0, 1) = 0.1;
  CHECK(kind_of([&] { DensityMatrix d(m); }) == ErrorKind::Validation);
  CHECK(kind_of([] { DensityMatrix d(Matrix::Zero(2, 3)); }) == ErrorKind::Shape);
}

TEST_CASE("bloch vector round trip") {
  const std::array<double, 3> r{0.1, -0.2, 0.3};
  const auto back = bloch_vector(from_bloch_vector(r));
  for (int k = 0; k < 3; ++k) CHECK(back[static_cast<std::size_t>(k)] == doctest::Approx(r[static_cast<std::size_t>(k)]));
}
