#include "doctest.h"

#include "oracles.hpp"
#include "qgeo/bloch.hpp"
#include "qgeo/error.hpp"

using namespace qgeo;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected qgeo::Error");
  return ErrorKind::Domain;
}

RingLattice random_ring(oracle::Rng& rng, int cells, int orbitals) {
  RingLattice r;
  r.cells = cells;
  r.orbitals = orbitals;
  r.intra = oracle::random_hermitian(rng, orbitals);
  r.inter = oracle::ginibre(rng, orbitals);
  r.period = rng.uniform(0.5, 2.0);
  return r;
}

}  // namespace

TEST_CASE("QWZ fiber Hamiltonian") {
  const auto model = qwz_model(1.0);
  CHECK(model.bands == 2);
  const std::array<double, 2> eps{0.0, 0.0};
  CHECK(max_abs(model.hamiltonian(eps) - 3.0 * pauli::z()) < 1e-15);
  const std::array<double, 2> eps2{kPi / 2, 0.0};
  CHECK(max_abs(model.hamiltonian(eps2) - (pauli::x() + 2.0 * pauli::z())) < 1e-15);
  CHECK(model.jump_operators(eps).empty());

  const std::array<double, 1> bad{0.0};
  CHECK(kind_of([&] { model.hamiltonian(bad); }) == ErrorKind::Shape);
}

TEST_CASE("two_band_model matches QWZ when given the same harmonics") {
  std::array<std::vector<Harmonic>, 3> d;
  d[0] = {{{1, 0}, 0.0, 1.0}};
  d[1] = {{{0, 1}, 0.0, 1.0}};
  d[2] = {{{0, 0}, -1.3, 0.0}, {{1, 0}, 1.0, 0.0}, {{0, 1}, 1.0, 0.0}};
  const auto a = two_band_model(d);
  const auto b = qwz_model(-1.3);
  oracle::Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const std::array<double, 2> eps{rng.uniform(0, kTwoPi), rng.uniform(0, kTwoPi)};
    CHECK(max_abs(a.hamiltonian(eps) - b.hamiltonian(eps)) < 1e-14);
  }
  d[0] = {{{1, 0, 0}, 1.0, 0.0}};
  CHECK(kind_of([&] { two_band_model(d); }) == ErrorKind::Validation);
}

TEST_CASE("band projectors and gap") {
  const auto model = qwz_model(1.0);
  const TorusGrid g({16, 16});
  // |d| is smallest (=1) at (0, pi), (pi, 0) and (pi, pi).
  CHECK(min_gap(model, g) == doctest::Approx(2.0));

  const std::array<double, 2> origin{0.0, 0.0};
  const auto p0 = band_projector(model, origin, 0);
  Matrix down = Matrix::Zero(2, 2);
  down(1, 1) = 1.0;
  CHECK(max_abs(p0.mat() - down) < 1e-14);
  const auto p1 = band_projector(model, origin, 1);
  CHECK(max_abs(p0.mat() + p1.mat() - Matrix::Identity(2, 2)) < 1e-14);

  const auto field = band_projector_field(model, g, 0);
  CHECK(field.kind == FiberKind::Projector);
  CHECK(field.values.size() == 256);
  for (const auto& p : field.values) {
    CHECK(max_abs(p * p - p) < 1e-12);
    CHECK(std::abs(p.trace() - 1.0) < 1e-12);
  }
  CHECK(kind_of([&] { band_projector(model, origin, 2); }) == ErrorKind::Domain);
}

TEST_CASE("band_projector fails at a gap closing") {
  const auto model = qwz_model(2.0);  // d vanishes at (pi, pi)
  const std::array<double, 2> eps{kPi, kPi};
  CHECK(kind_of([&] { band_projector(model, eps, 0); }) == ErrorKind::Degeneracy);
  CHECK(kind_of([&] { band_projector_field(model, TorusGrid({8, 8}), 0); }) ==
        ErrorKind::Degeneracy);
}

TEST_CASE("thermal_family limits") {
  const auto model = qwz_model(-1.0);
  const TorusGrid g({8, 8});
  const auto cold = thermal_family(model, 1e-3, g);
  const auto proj = band_projector_field(model, g, 0);
  const auto hot = thermal_family(model, 1e6, g);
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    CHECK(max_abs(cold.values[n] - proj.values[n]) < 1e-12);
    CHECK(max_abs(hot.values[n] - 0.5 * Matrix::Identity(2, 2)) < 1e-5);
  }
  CHECK(kind_of([&] { thermal_family(model, 0.0, g); }) == ErrorKind::Domain);
}

TEST_CASE("ring lattice, one orbital, four cells") {
  RingLattice r;
  r.cells = 4;
  r.orbitals = 1;
  r.intra = Matrix::Zero(1, 1);
  r.inter = Matrix::Ones(1, 1);
  const auto fibers = bloch_decompose(r);
  REQUIRE(fibers.size() == 4);
  const std::array<double, 4> expected{2.0, 0.0, -2.0, 0.0};
  for (int m = 0; m < 4; ++m) {
    CHECK(fibers[m].eps == doctest::Approx(kTwoPi * m / 4));
    CHECK(fibers[m].hamiltonian(0, 0).real() == doctest::Approx(expected[m]).epsilon(1e-14));
    CHECK(std::abs(fibers[m].hamiltonian(0, 0).imag()) < 1e-14);
  }
  const RealVector full = eigh(r.hamiltonian()).values;
  const RealVector fib = fiber_spectrum(fibers);
  CHECK((full - fib).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("property: real-space and fiber spectra coincide") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int cells = rng.integer(2, 9);
    const int orbitals = rng.integer(1, 3);
    CAPTURE(cells);
    CAPTURE(orbitals);
    const auto r = random_ring(rng, cells, orbitals);
    const Matrix h = r.hamiltonian();
    CHECK(is_hermitian(h));
    CHECK(translation_invariance_check(h, r.translation()) < 1e-12);
    const RealVector full = eigh(h).values;
    const RealVector fib = fiber_spectrum(bloch_decompose(r));
    REQUIRE(full.size() == fib.size());
    CHECK((full - fib).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("property: an impurity breaks translation invariance") {
  oracle::Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = random_ring(rng, rng.integer(3, 6), rng.integer(1, 2));
    Matrix h = r.hamiltonian();
    h(0, 0) += rng.uniform(0.1, 1.0);
    CHECK(translation_invariance_check(h, r.translation()) > 1e-3);
  }
}

TEST_CASE("translation operator") {
  oracle::Rng rng(19);
  const auto r = random_ring(rng, 5, 2);
  const Matrix t = r.translation();
  CHECK(is_unitary(t));
  Matrix t5 = Matrix::Identity(10, 10);
  for (int k = 0; k < 5; ++k) t5 = t * t5;
  CHECK(max_abs(t5 - Matrix::Identity(10, 10)) < 1e-15);
  CHECK(kind_of([&] { translation_invariance_check(Matrix::Identity(3, 3), t); }) == ErrorKind::Shape);
  CHECK(kind_of([&] { translation_invariance_check(Matrix::Identity(10, 10), 2.0 * t); }) ==
        ErrorKind::Validation);
}

TEST_CASE("ring lattice validation") {
  RingLattice r;
  r.cells = 1;
  r.orbitals = 1;
  r.intra = Matrix::Zero(1, 1);
  r.inter = Matrix::Ones(1, 1);
  CHECK(kind_of([&] { r.validate(); }) == ErrorKind::Domain);
  r.cells = 3;
  r.intra = Matrix::Zero(2, 2);
  CHECK(kind_of([&] { r.validate(); }) == ErrorKind::Shape);
  r.intra = Matrix::Zero(1, 1);
  r.intra(0, 0) = cplx(0, 1);
  CHECK(kind_of([&] { r.validate(); }) == ErrorKind::Validation);
  r.intra(0, 0) = 0.0;
  r.period = -1.0;
  CHECK(kind_of([&] { r.validate(); }) == ErrorKind::Domain);
}
