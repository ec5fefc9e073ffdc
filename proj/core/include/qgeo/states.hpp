#pragma once

// State-space types: vectors, pure states, density matrices, amplitudes
// (points M of the bundle above rho = M M^dagger), and the Hilbert-Schmidt
// geometry on them.

#include <array>
#include <utility>

#include "qgeo/linalg.hpp"

namespace qgeo {

inline constexpr double kDefaultRankTol = 1e-10;

class StateVector {
 public:
  explicit StateVector(Vector entries);

  Eigen::Index dim() const noexcept { return entries_.size(); }
  const Vector& entries() const noexcept { return entries_; }
  double norm() const { return entries_.norm(); }

 private:
  Vector entries_;
};

// Unit-norm representative of a ray.
class PureState {
 public:
  // Throws unless |z| = 1 within 1e-12.
  explicit PureState(Vector z);
  static PureState normalized(const Vector& z);

  Eigen::Index dim() const noexcept { return rep_.size(); }
  const Vector& rep() const noexcept { return rep_; }

  // Same ray, representative multiplied by exp(i*theta).
  PureState rephased(double theta) const;

 private:
  Vector rep_;
};

struct DensityTolerance {
  double hermiticity = 1e-12;  // relative to max |entry|
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix mat, const DensityTolerance& tol = {});

  Eigen::Index dim() const noexcept { return mat_.rows(); }
  const Matrix& mat() const noexcept { return mat_; }

  // Ascending eigenvalues of the Hermitian part.
  RealVector eigenvalues() const;

 private:
  Matrix mat_;
};

// Amplitude M with rho = M M^dagger. `normalized` records tr(M M^dagger) = 1.
class Amplitude {
 public:
  explicit Amplitude(Matrix mat);

  Eigen::Index dim() const noexcept { return mat_.rows(); }
  const Matrix& mat() const noexcept { return mat_; }
  bool normalized() const noexcept { return normalized_; }

  DensityMatrix density() const;
  Matrix gram() const { return mat_.adjoint() * mat_; }  // M^dagger M

 private:
  Matrix mat_;
  bool normalized_;
};

struct RankStratum {
  int rank = 0;
  RealVector eigenvalues;  // descending, clamped at 0
  bool is_maximal = false;
  bool is_pure = false;
  bool is_max_disorder = false;
};

struct PolarDecomposition {
  Matrix positive;  // P = sqrt(M M^dagger)
  Matrix unitary;   // U with M = P U
};

DensityMatrix projector(const PureState& z);

DensityMatrix thermal_state(const Matrix& hamiltonian, double temperature);

DensityMatrix maximally_mixed(Eigen::Index n);

PolarDecomposition polar_decompose(const Matrix& m);

// sqrt(rho), the global section of the amplitude bundle over full-rank states.
Amplitude canonical_amplitude(const DensityMatrix& rho,
                              double rank_tol = kDefaultRankTol);

RankStratum rank_stratum(const DensityMatrix& rho, double tol = kDefaultRankTol);

// tr(M1^dagger M2)
cplx hs_inner(const Matrix& m1, const Matrix& m2);

// Real metric g(M1, M2) = Re tr(M1^dagger M2).
double hs_metric(const Matrix& m1, const Matrix& m2);

// tr sqrt(sqrt(rho) sigma sqrt(rho))
double fidelity_root(const DensityMatrix& rho, const DensityMatrix& sigma);

// sqrt(2 - 2 tr sqrt(sqrt(rho) sigma sqrt(rho)))
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Qubit helpers: rho = (I + r . sigma) / 2.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);
DensityMatrix from_bloch_vector(const std::array<double, 3>& r);

}  // namespace qgeo
