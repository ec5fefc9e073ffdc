#pragma once

// Connections, horizontal lifts and holonomies.
//
// Pure states: the U(1) connection on C^N_0 -> CP^{N-1} and the discrete
// (Pancharatnam) transport that realizes the Aharonov-Anandan phase.
//
// Mixed states: the Uhlmann connection on amplitudes M over full-rank
// density matrices. Its value on a tangent dM is the anti-Hermitian A
// solving
//
//     A (M^dagger M) + (M^dagger M) A = M^dagger dM - dM^dagger M,
//
// which vanishes on horizontal vectors (X^dagger M = M^dagger X) and
// returns i*phi on vertical ones (dM = i M phi).

#include <optional>
#include <vector>

#include "qgeo/states.hpp"

namespace qgeo {

struct AmbientTangent {
  StateVector base;
  Vector vec;
};

struct MatrixTangent {
  Amplitude base;
  Matrix vec;
};

// Anti-Hermitian, u(N)-valued.
class ConnectionValue {
 public:
  explicit ConnectionValue(Matrix mat);
  const Matrix& mat() const noexcept { return mat_; }

 private:
  Matrix mat_;
};

template <class State>
struct StateLoop {
  std::vector<State> samples;
  std::vector<double> params;  // empty means 0, 1, ..., K
  bool closed = true;
};

using PureLoop = StateLoop<PureState>;
using MixedLoop = StateLoop<DensityMatrix>;

struct HolonomyResult {
  Matrix holonomy;  // unitary
  double phase = 0.0;  // (-pi, pi]
  int mesh = 0;
};

struct ConnectionComponents {
  double dilation = 0.0;
  double phase = 0.0;
};

// Dilation and phase parts of the ambient connection: Re<z|v>/<z|z> and
// Im<z|v>/<z|z>, normalized so that v = z gives (1, 0) and v = iz gives (0, 1).
ConnectionComponents ambient_connection_components(const AmbientTangent& t);

// Fubini-Study Hermitian form pulled back to the sphere at unit z:
// <u|v> - <u|z><z|v>.
cplx fs_metric(const PureState& z, const Vector& u, const Vector& v);

// Closing sample: pure loops close on the ray (projector equality),
// mixed loops on the matrix.
bool loop_is_closed(const PureLoop& loop, double tol = 1e-10);
bool loop_is_closed(const MixedLoop& loop, double tol = 1e-10);

// Discrete horizontal transport of a closed pure-state loop. The phase is
// arg <psi_0|psi_K> for the lift with <psi_k|psi_{k+1}> > 0, which equals
// -arg prod_k <z_k|z_{k+1}> for any representatives z_k (closing sample
// identified with the first), so it is exactly gauge invariant. A loop
// enclosing solid angle Omega on the Bloch sphere gives -Omega/2.
HolonomyResult aa_phase(const PureLoop& loop);

enum class UhlmannAlgorithm { Sylvester, Eigenbasis };

ConnectionValue uhlmann_connection(const Amplitude& m, const Matrix& dm,
                                   UhlmannAlgorithm algorithm = UhlmannAlgorithm::Eigenbasis);
ConnectionValue uhlmann_connection(const MatrixTangent& t,
                                   UhlmannAlgorithm algorithm = UhlmannAlgorithm::Eigenbasis);

// Returns X_h = X - i M phi with X_h horizontal.
Matrix horizontal_project(const Amplitude& m, const Matrix& x);

// Residual of A C + C A - (M^dagger dM - dM^dagger M), max-abs.
double uhlmann_residual(const Amplitude& m, const Matrix& dm, const Matrix& a);

// Residual of X^dagger M - M^dagger X, max-abs.
double horizontality_residual(const Amplitude& m, const Matrix& x);

enum class TransportMethod {
  // Relative amplitudes aligned so that W_k^dagger W_{k+1} > 0.
  PolarAlignment,
  // Path-ordered product of exp(-A_U) over the canonical section sqrt(rho),
  // tangents from central differences.
  PathOrdered
};

HolonomyResult uhlmann_transport(const MixedLoop& loop,
                                 TransportMethod method = TransportMethod::PolarAlignment,
                                 double rank_tol = kDefaultRankTol);

// Amplitudes W_0 .. W_K of the polar-aligned lift (used by tests to check
// discrete horizontality).
std::vector<Matrix> uhlmann_lift(const MixedLoop& loop, double rank_tol = kDefaultRankTol);

// Tangent estimates along a sampled path: central differences inside,
// one-sided at the ends; step is the parameter spacing.
std::vector<Matrix> path_derivatives(const std::vector<Matrix>& path,
                                     const std::vector<double>& params);

}  // namespace qgeo
