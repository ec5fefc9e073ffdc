#include "qgeo/linalg.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qgeo/error.hpp"

namespace qgeo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Stratum: return "stratum";
    case ErrorKind::CentralState: return "central-state";
    case ErrorKind::Degeneracy: return "degeneracy";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::Admissibility: return "admissibility";
    case ErrorKind::Stability: return "stability";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Stratum:
    case ErrorKind::CentralState:
    case ErrorKind::Degeneracy:
    case ErrorKind::IllConditioned:
    case ErrorKind::Admissibility:
    case ErrorKind::Stability:
      return true;
    default:
      return false;
  }
}

namespace pauli {
Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
Matrix y() {
  Matrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}
Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
Matrix identity() { return Matrix::Identity(2, 2); }
}  // namespace pauli

HermitianEigen eigh(const Matrix& h) {
  if (h.rows() != h.cols()) fail(ErrorKind::Shape, "eigh: matrix is not square");
  // Symmetrize first so roundoff in the input cannot leak into the solver.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(h));
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::Validation, "eigh: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& a) {
  return max_abs(a - a.adjoint());
}

bool is_hermitian(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(max_abs(a), 1.0);
  return hermiticity_residual(a) <= rel_tol * scale;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())) <= tol;
}

Matrix hermitian_part(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Matrix sqrtm_psd(const Matrix& h) {
  const auto [values, vectors] = eigh(h);
  RealVector roots(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (v < -kPsdClamp) {
      fail(ErrorKind::Validation,
           "sqrtm_psd: eigenvalue " + std::to_string(v) + " is negative");
    }
    roots[i] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  return vectors * roots.cast<cplx>().asDiagonal() * vectors.adjoint();
}

Matrix expm_hermitian(const Matrix& h) {
  const auto [values, vectors] = eigh(h);
  const Vector e = values.array().exp().cast<cplx>();
  return vectors * e.asDiagonal() * vectors.adjoint();
}

Matrix expm(const Matrix& a) { return a.exp(); }

Matrix logm(const Matrix& a) { return a.log(); }

double hs_norm(const Matrix& a) { return a.norm(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Vector vec(const Matrix& a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}

Matrix unvec(const Vector& v, Eigen::Index n) {
  if (v.size() != n * n) fail(ErrorKind::Shape, "unvec: length is not n^2");
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

double wrap_angle(double phi) {
  double w = std::remainder(phi, kTwoPi);  // [-pi, pi]
  if (w <= -kPi) w += kTwoPi;
  return w;
}

}  // namespace qgeo
