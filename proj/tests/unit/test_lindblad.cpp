#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "qgeo/error.hpp"
#include "qgeo/lindblad.hpp"

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

// Independent right-hand side, written out term by term.
Matrix reference_rhs(const Matrix& h, const std::vector<Matrix>& jumps, const Matrix& rho) {
  Matrix out = -kI * (h * rho - rho * h);
  for (const auto& k : jumps) {
    const Matrix kdk = k.adjoint() * k;
    out += k * rho * k.adjoint() - 0.5 * (kdk * rho + rho * kdk);
  }
  return out;
}

Matrix lowering() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;  // |0><1|, |1> excited
  return s;
}

BlochModel zero_model() { return two_band_model({}); }

}  // namespace

TEST_CASE("property: Liouvillian matrix reproduces the GKLS right-hand side") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    GKLSSpec spec{oracle::random_hermitian(rng, n), {}};
    const int jumps = trial % 4;
    for (int k = 0; k < jumps; ++k) spec.jumps.push_back(0.5 * oracle::ginibre(rng, n));
    const Matrix rho = oracle::random_density(rng, n);
    const Matrix expected = reference_rhs(spec.hamiltonian, spec.jumps, rho);
    const auto l = liouvillian_matrix(spec);
    CHECK(l.dim == n);
    CHECK(max_abs(unvec(l.mat * vec(rho), n) - expected) <= 1e-12);
    CHECK(max_abs(gkls_rhs(spec, rho) - expected) <= 1e-12);
    CHECK(l.trace_residual() <= 1e-12);
  }
}

TEST_CASE("Liouvillian spectra of elementary generators") {
  auto sorted_spectrum = [](const Matrix& m) {
    Eigen::ComplexEigenSolver<Matrix> es(m);
    std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
      return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
    });
    return v;
  };
  // Pure precession under sigma_z.
  auto s = sorted_spectrum(liouvillian_matrix({pauli::z(), {}}).mat);
  CHECK(std::abs(s[0] - cplx(0, -2)) < 1e-12);
  CHECK(std::abs(s[1]) < 1e-12);
  CHECK(std::abs(s[2]) < 1e-12);
  CHECK(std::abs(s[3] - cplx(0, 2)) < 1e-12);

  // Pure dephasing with K = sigma_z: coherences decay at rate 2.
  s = sorted_spectrum(liouvillian_matrix({Matrix::Zero(2, 2), {pauli::z()}}).mat);
  std::vector<double> re;
  for (auto c : s) re.push_back(c.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-2.0));
  CHECK(re[1] == doctest::Approx(-2.0));
  CHECK(std::abs(re[2]) < 1e-12);
  CHECK(std::abs(re[3]) < 1e-12);
}

TEST_CASE("amplitude damping closed form") {
  const double gamma = 0.7;
  const GKLSSpec spec{Matrix::Zero(2, 2), {std::sqrt(gamma) * lowering()}};
  Matrix rho0(2, 2);
  rho0 << 0.3, cplx(0.2, 0.1), cplx(0.2, -0.1), 0.7;
  for (double t : {0.0, 0.1, 1.0, 3.0}) {
    const Matrix rho = evolve(DensityMatrix(rho0), spec, t).mat();
    const double p1 = 0.7 * std::exp(-gamma * t);
    CHECK(rho(1, 1).real() == doctest::Approx(p1).epsilon(1e-12));
    CHECK(rho(0, 0).real() == doctest::Approx(1.0 - p1).epsilon(1e-12));
    CHECK(std::abs(rho(0, 1) - cplx(0.2, 0.1) * std::exp(-gamma * t / 2)) < 1e-12);
  }
}

TEST_CASE("RK4 converges at fourth order") {
  GKLSSpec spec{0.5 * pauli::x() + 0.3 * pauli::z(), {std::sqrt(0.2) * lowering()}};
  Matrix rho0(2, 2);
  rho0 << 0.6, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.4;
  const double t = 2.0;
  const Matrix exact = propagate(rho0, spec, t, Exact{});
  const double e1 = max_abs(propagate(rho0, spec, t, RK4{0.04}) - exact);
  const double e2 = max_abs(propagate(rho0, spec, t, RK4{0.02}) - exact);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(2.0 / 16.0));
}

TEST_CASE("property: exact propagation is a semigroup and CPTP") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    GKLSSpec spec{oracle::random_hermitian(rng, n), {0.4 * oracle::ginibre(rng, n)}};
    const DensityMatrix rho0(oracle::random_density(rng, n));
    const double t1 = rng.uniform(0.0, 1.0);
    const double t2 = rng.uniform(0.0, 1.0);
    const DensityMatrix a = evolve(evolve(rho0, spec, t1), spec, t2);
    const DensityMatrix b = evolve(rho0, spec, t1 + t2);
    CHECK(max_abs(a.mat() - b.mat()) <= 1e-10);
    const auto d = cptp_diagnostics(b.mat());
    CHECK(d.trace_error <= 1e-12);
    CHECK(d.hermiticity <= 1e-12);
    CHECK(d.min_eigenvalue >= -1e-12);
  }
}

TEST_CASE("propagation errors") {
  const GKLSSpec spec{pauli::z(), {pauli::x()}};
  const Matrix rho = maximally_mixed(2).mat();
  CHECK(kind_of([&] { propagate(rho, spec, -1.0, Exact{}); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { propagate(rho, spec, 1.0, RK4{0.0}); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { propagate(rho, spec, 1.0, RK4{1.0}); }) == ErrorKind::Stability);
  CHECK(kind_of([&] { propagate(Matrix::Identity(3, 3) / 3.0, spec, 1.0, Exact{}); }) ==
        ErrorKind::Shape);
  CHECK(kind_of([] { GKLSSpec{pauli::x() + kI * pauli::z(), {}}.validate(); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] { GKLSSpec{pauli::x(), {Matrix::Identity(3, 3)}}.validate(); }) ==
        ErrorKind::Shape);
  CHECK(max_abs(propagate(rho, spec, 0.0, Exact{}) - rho) == 0.0);
}

TEST_CASE("depolarizing jumps shrink the Bloch vector at rate gamma") {
  const double gamma = 0.5;
  const auto model = with_jumps(zero_model(), depolarizing_jumps(gamma));
  const TorusGrid g({6, 6});
  const auto field0 = thermal_family(qwz_model(1.0), 0.8, g);
  const double t = 1.3;
  const auto field = fiberwise_evolve(model, field0, t);
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const Matrix expected = 0.5 * Matrix::Identity(2, 2) +
                            std::exp(-gamma * t) * (field0.values[n] - 0.5 * Matrix::Identity(2, 2));
    CHECK(max_abs(field.values[n] - expected) <= 1e-12);
  }
}

TEST_CASE("fiberwise_evolve matches node-by-node evolution") {
  const auto model = with_jumps(qwz_model(-1.0), band_projector_jumps(qwz_model(-1.0), 0.3));
  const TorusGrid g({6, 6});
  oracle::Rng rng(44);
  FiberField f{g, FiberKind::Density, {}};
  for (std::size_t n = 0; n < g.node_count(); ++n) f.values.push_back(oracle::random_density(rng, 2));
  const auto out1 = fiberwise_evolve(model, f, 0.8, Exact{}, 1);
  const auto out3 = fiberwise_evolve(model, f, 0.8, Exact{}, 3);
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const auto eps = g.point(n);
    const GKLSSpec spec{model.hamiltonian(eps), model.jump_operators(eps)};
    const Matrix expected = evolve(DensityMatrix(f.values[n]), spec, 0.8).mat();
    CHECK(max_abs(out1.values[n] - expected) <= 1e-13);
    CHECK(out1.values[n] == out3.values[n]);
  }
}

TEST_CASE("band projector dissipation relaxes to the lower band") {
  const auto base = qwz_model(1.0);
  const auto model = with_jumps(base, band_projector_jumps(base, 1.0));
  const std::array<double, 2> eps{0.4, 1.9};
  const auto jumps = model.jump_operators(eps);
  REQUIRE(jumps.size() == 1);
  const Matrix p = band_projector(base, eps, 0).mat();
  CHECK(max_abs(jumps[0] - p) <= 1e-12);
  CHECK(kind_of([&] { band_projector_jumps(base, -1.0); }) == ErrorKind::Domain);
  CHECK(kind_of([] { depolarizing_jumps(-1.0); }) == ErrorKind::Domain);
}

TEST_CASE("invariance experiment: closed evolution keeps the degree") {
  const auto model = qwz_model(-1.0);
  const auto field0 = thermal_family(model, 0.5, TorusGrid({12, 12}));
  const auto rec = invariance_experiment(model, field0, {0.0, 0.5, 1.0, 2.0, 4.0});
  REQUIRE(rec.samples.size() == 5);
  CHECK(rec.invariant());
  CHECK_FALSE(rec.first_crossing.has_value());
  CHECK_FALSE(rec.first_degree_change.has_value());
  for (const auto& s : rec.samples) {
    REQUIRE(s.degree.has_value());
    CHECK(*s.degree == 1);
    CHECK(s.margins_ok);
    CHECK(s.worst.trace_error <= 1e-12);
  }
  CHECK(rec.node_margins.size() == 5 * 144);
}

TEST_CASE("invariance experiment: depolarization reaches the center") {
  const double gamma = 1.0;
  const auto model = with_jumps(qwz_model(1.0), depolarizing_jumps(gamma));
  const auto field0 = thermal_family(qwz_model(1.0), 0.5, TorusGrid({8, 8}));
  std::vector<double> times;
  for (int k = 0; k <= 25; ++k) times.push_back(k);
  ExperimentOptions opt;
  opt.keep_states = true;
  const auto rec = invariance_experiment(model, field0, times, opt);
  CHECK(rec.invariant());
  REQUIRE(rec.first_crossing.has_value());
  // dist_center = |r|/sqrt(2) with |r| <= e^{-t}.
  CHECK(*rec.first_crossing <= 15.0);
  CHECK(*rec.first_crossing >= 10.0);
  if (rec.first_degree_change) CHECK(*rec.first_crossing <= *rec.first_degree_change);
  CHECK(rec.states.size() == times.size());
  CHECK_FALSE(rec.samples.back().degree.has_value());
  int windows = 0;
  for (const auto& s : rec.samples) windows += s.transition_window ? 1 : 0;
  CHECK(windows == 1);
}

TEST_CASE("invariance experiment errors") {
  const auto model = qwz_model(1.0);
  const auto field0 = thermal_family(model, 0.5, TorusGrid({4, 4}));
  CHECK(kind_of([&] { invariance_experiment(model, field0, {}); }) == ErrorKind::Validation);
  CHECK(kind_of([&] { invariance_experiment(model, field0, {1.0, 0.5}); }) == ErrorKind::Validation);
  FiberField qutrit{TorusGrid({4, 4}), FiberKind::Density,
                    std::vector<Matrix>(16, maximally_mixed(3).mat())};
  CHECK(kind_of([&] { invariance_experiment(model, qutrit, {0.0}); }) == ErrorKind::Precondition);
}
