#include "qgeo/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorKind::Shape, std::string(who) + ": matrix must be square and non-empty");
  }
}

}  // namespace

StateVector::StateVector(Vector entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) fail(ErrorKind::Domain, "StateVector: dim must be >= 2");
}

PureState::PureState(Vector z) : rep_(std::move(z)) {
  if (rep_.size() < 2) fail(ErrorKind::Domain, "PureState: dim must be >= 2");
  if (std::abs(rep_.norm() - 1.0) > 1e-12) {
    fail(ErrorKind::Validation, "PureState: representative is not unit norm");
  }
}

PureState PureState::normalized(const Vector& z) {
  const double n = z.norm();
  if (!(n > 0.0)) fail(ErrorKind::Domain, "PureState: zero vector");
  return PureState(z / n);
}

PureState PureState::rephased(double theta) const {
  return PureState(rep_ * std::polar(1.0, theta));
}

DensityMatrix::DensityMatrix(Matrix mat, const DensityTolerance& tol)
    : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  if (!mat_.allFinite()) fail(ErrorKind::Validation, "DensityMatrix: non-finite entry");
  if (hermiticity_residual(mat_) > tol.hermiticity * std::max(max_abs(mat_), 1e-300)) {
    fail(ErrorKind::Validation, "DensityMatrix: not Hermitian");
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    fail(ErrorKind::Validation,
         "DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const double lo = eigenvalues().minCoeff();
  if (lo < tol.min_eigenvalue) {
    fail(ErrorKind::Validation,
         "DensityMatrix: negative eigenvalue " + std::to_string(lo));
  }
}

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(mat_),
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Amplitude::Amplitude(Matrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "Amplitude");
  const RealVector sv = mat_.jacobiSvd().singularValues();
  if (!(sv[0] > 0.0) || sv[sv.size() - 1] <= 1e-12 * sv[0]) {
    fail(ErrorKind::Stratum, "Amplitude: matrix is singular");
  }
  normalized_ = std::abs(mat_.squaredNorm() - 1.0) <= 1e-12;
}

DensityMatrix Amplitude::density() const {
  const Matrix rho = mat_ * mat_.adjoint();
  return DensityMatrix(hermitian_part(rho / rho.trace().real()));
}

DensityMatrix projector(const PureState& z) {
  return DensityMatrix(z.rep() * z.rep().adjoint());
}

DensityMatrix thermal_state(const Matrix& hamiltonian, double temperature) {
  require_square(hamiltonian, "thermal_state");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    fail(ErrorKind::Domain, "thermal_state: temperature must be positive");
  }
  if (!is_hermitian(hamiltonian)) {
    fail(ErrorKind::Validation, "thermal_state: Hamiltonian is not Hermitian");
  }
  const auto [energies, vectors] = eigh(hamiltonian);
  // Shift by the ground energy so the largest weight is exactly 1.
  const double e0 = energies.minCoeff();
  RealVector w = (-(energies.array() - e0) / temperature).exp();
  w /= w.sum();
  return DensityMatrix(vectors * w.cast<cplx>().asDiagonal() * vectors.adjoint());
}

DensityMatrix maximally_mixed(Eigen::Index n) {
  if (n < 2) fail(ErrorKind::Domain, "maximally_mixed: N must be >= 2");
  return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n));
}

PolarDecomposition polar_decompose(const Matrix& m) {
  require_square(m, "polar_decompose");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  if (!(s[0] > 0.0) || s[s.size() - 1] <= 1e-12 * s[0]) {
    fail(ErrorKind::Stratum, "polar_decompose: matrix is rank deficient");
  }
  const Matrix& w = svd.matrixU();
  const Matrix& v = svd.matrixV();
  return {w * s.cast<cplx>().asDiagonal() * w.adjoint(), w * v.adjoint()};
}

Amplitude canonical_amplitude(const DensityMatrix& rho, double rank_tol) {
  const auto [values, vectors] = eigh(rho.mat());
  if (values.minCoeff() <= rank_tol) {
    fail(ErrorKind::Stratum, "canonical_amplitude: density matrix is not full rank");
  }
  const RealVector roots = values.array().sqrt();
  return Amplitude(vectors * roots.cast<cplx>().asDiagonal() * vectors.adjoint());
}

RankStratum rank_stratum(const DensityMatrix& rho, double tol) {
  RankStratum out;
  RealVector ev = rho.eigenvalues().reverse();
  ev = ev.cwiseMax(0.0);
  out.rank = static_cast<int>((ev.array() > tol).count());
  out.eigenvalues = ev;
  const auto n = rho.dim();
  out.is_maximal = out.rank == n;
  out.is_pure = out.rank == 1;
  const Matrix centre = Matrix::Identity(n, n) / static_cast<double>(n);
  out.is_max_disorder = hs_norm(rho.mat() - centre) <= tol;
  return out;
}

cplx hs_inner(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    fail(ErrorKind::Shape, "hs_inner: dimension mismatch");
  }
  return (m1.adjoint() * m2).trace();
}

double hs_metric(const Matrix& m1, const Matrix& m2) { return hs_inner(m1, m2).real(); }

double fidelity_root(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) fail(ErrorKind::Shape, "fidelity: dimension mismatch");
  const Matrix s = sqrtm_psd(rho.mat());
  const Matrix inner = hermitian_part(s * sigma.mat() * s);
  const auto [values, vectors] = eigh(inner);
  (void)vectors;
  double f = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) f += std::sqrt(std::max(values[i], 0.0));
  return f;
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = std::min(fidelity_root(rho, sigma), 1.0);
  return std::sqrt(std::max(2.0 - 2.0 * f, 0.0));
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) fail(ErrorKind::Precondition, "bloch_vector: requires N = 2");
  const Matrix& m = rho.mat();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
          (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix from_bloch_vector(const std::array<double, 3>& r) {
  const Matrix m = 0.5 * (pauli::identity() + r[0] * pauli::x() + r[1] * pauli::y() +
                          r[2] * pauli::z());
  return DensityMatrix(m);
}

}  // namespace qgeo
