#pragma once

// GKLS generators and their propagation, single-state and fiberwise over a
// Brillouin-zone grid.
//
// Vectorization is column-stacking, vec(A X B) = (B^T (x) A) vec(X), so
//
//   L = -i (I (x) H - H^T (x) I)
//       + sum_k [ conj(K) (x) K - 1/2 (I (x) K^dagger K + (K^dagger K)^T (x) I) ].

#include <optional>
#include <variant>
#include <vector>

#include "qgeo/bloch.hpp"

namespace qgeo {

struct GKLSSpec {
  Matrix hamiltonian;
  std::vector<Matrix> jumps;

  Eigen::Index dim() const noexcept { return hamiltonian.rows(); }
  void validate() const;
};

struct Liouvillian {
  Matrix mat;  // N^2 x N^2
  Eigen::Index dim = 0;

  // max |sum_i L(i + N i, :)|: the trace functional composed with L.
  double trace_residual() const;
};

Liouvillian liouvillian_matrix(const GKLSSpec& spec);

// Right-hand side evaluated directly on the matrix.
Matrix gkls_rhs(const GKLSSpec& spec, const Matrix& rho);

struct Exact {};
struct RK4 {
  double dt = 0.0;
};
using Method = std::variant<Exact, RK4>;

struct CptpDiagnostics {
  double trace_error = 0.0;        // |tr rho - 1|
  double min_eigenvalue = 0.0;
  double hermiticity = 0.0;        // max |rho - rho^dagger|
};

CptpDiagnostics cptp_diagnostics(const Matrix& rho);

// Tolerances used to accept propagated states.
inline constexpr DensityTolerance kEvolvedTolerance{1e-10, 1e-9, -1e-8};

Matrix propagate(const Matrix& rho0, const GKLSSpec& spec, double t, const Method& method);

DensityMatrix evolve(const DensityMatrix& rho0, const GKLSSpec& spec, double t,
                     const Method& method = Exact{});

// Applies `evolve` independently at every node with (H_eps, K_eps) taken
// from the model.
FiberField fiberwise_evolve(const BlochModel& model, const FiberField& field, double t,
                            const Method& method = Exact{}, unsigned threads = 1);

struct NodeMargin {
  double time = 0.0;
  int i = 0;
  int j = 0;
  double min_eig = 0.0;
  double dist_center = 0.0;
};

struct TrajectorySample {
  double time = 0.0;
  std::optional<int> degree;  // empty when undefined at this time
  double degree_residual = 0.0;
  double min_eig = 0.0;       // minimum over nodes
  double min_dist_center = 0.0;
  bool margins_ok = false;    // both minima above threshold
  bool transition_window = false;  // a margin crossed the threshold since the previous time
  CptpDiagnostics worst{};    // worst node-wise diagnostics
};

struct TrajectoryRecord {
  std::vector<TrajectorySample> samples;
  std::vector<NodeMargin> node_margins;
  std::vector<FiberField> states;
  // Consecutive pairs with margins above threshold whose degrees differ.
  std::vector<std::pair<double, double>> violations;
  // First time a margin fell below threshold, if any.
  std::optional<double> first_crossing;
  // First time the degree differs from the initial one, if any.
  std::optional<double> first_degree_change;

  bool invariant() const noexcept { return violations.empty(); }
};

struct ExperimentOptions {
  double margin_threshold = 1e-6;
  bool keep_states = false;
  unsigned threads = 1;
};

TrajectoryRecord invariance_experiment(const BlochModel& model, const FiberField& field0,
                                       const std::vector<double>& times,
                                       const ExperimentOptions& options = {});

// Jump families used by the experiments.
// K = sqrt(gamma) * (lower-band projector at eps).
JumpMap band_projector_jumps(const BlochModel& model, double gamma);
// K_a = sqrt(gamma) sigma_a / 2, a = x, y, z, at every eps.
JumpMap depolarizing_jumps(double gamma);

BlochModel with_jumps(BlochModel model, JumpMap jumps);

}  // namespace qgeo
