#include "qgeo/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeo/error.hpp"
#include "qgeo/parallel.hpp"

namespace qgeo {

void GKLSSpec::validate() const {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
    fail(ErrorKind::Shape, "GKLSSpec: Hamiltonian must be square");
  }
  if (!is_hermitian(hamiltonian)) fail(ErrorKind::Validation, "GKLSSpec: H is not Hermitian");
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    if (jumps[k].rows() != dim() || jumps[k].cols() != dim()) {
      fail(ErrorKind::Shape, "GKLSSpec: jump " + std::to_string(k) + " has wrong dimension");
    }
  }
}

double Liouvillian::trace_residual() const {
  Eigen::RowVectorXcd tr = Eigen::RowVectorXcd::Zero(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) tr[i + dim * i] = 1.0;
  const Eigen::RowVectorXcd r = tr * mat;
  return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

Liouvillian liouvillian_matrix(const GKLSSpec& spec) {
  spec.validate();
  const Eigen::Index n = spec.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& h = spec.hamiltonian;
  Matrix l = -kI * (kron(id, h) - kron(h.transpose(), id));
  for (const Matrix& k : spec.jumps) {
    const Matrix kk = k.adjoint() * k;
    l += kron(k.conjugate(), k) - 0.5 * (kron(id, kk) + kron(kk.transpose(), id));
  }
  return {std::move(l), n};
}

Matrix gkls_rhs(const GKLSSpec& spec, const Matrix& rho) {
  Matrix out = -kI * commutator(spec.hamiltonian, rho);
  for (const Matrix& k : spec.jumps) {
    const Matrix kk = k.adjoint() * k;
    out += k * rho * k.adjoint() - 0.5 * anticommutator(kk, rho);
  }
  return out;
}

CptpDiagnostics cptp_diagnostics(const Matrix& rho) {
  CptpDiagnostics d;
  d.trace_error = std::abs(rho.trace() - 1.0);
  d.hermiticity = hermiticity_residual(rho);
  d.min_eigenvalue = eigh(rho).values.minCoeff();
  return d;
}

namespace {

Matrix rk4(const GKLSSpec& spec, Matrix rho, double t, double dt) {
  const Liouvillian l = liouvillian_matrix(spec);
  const double norm = Eigen::JacobiSVD<Matrix>(l.mat).singularValues()[0];
  if (!(dt > 0.0)) fail(ErrorKind::Domain, "evolve: rk4 step must be positive");
  if (norm > 0.0 && dt > 0.1 / norm) {
    fail(ErrorKind::Stability, "evolve: rk4 step " + std::to_string(dt) +
                                   " exceeds the stability guard 0.1/|L| = " +
                                   std::to_string(0.1 / norm));
  }
  double elapsed = 0.0;
  while (elapsed < t) {
    const double h = std::min(dt, t - elapsed);
    const Matrix k1 = gkls_rhs(spec, rho);
    const Matrix k2 = gkls_rhs(spec, rho + 0.5 * h * k1);
    const Matrix k3 = gkls_rhs(spec, rho + 0.5 * h * k2);
    const Matrix k4 = gkls_rhs(spec, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // Snap to t so the final step does not overshoot through roundoff.
    elapsed = (t - elapsed - h) <= 1e-15 * std::max(1.0, t) ? t : elapsed + h;
  }
  return rho;
}

}  // namespace

Matrix propagate(const Matrix& rho0, const GKLSSpec& spec, double t, const Method& method) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "evolve: time must be non-negative");
  if (rho0.rows() != spec.dim() || rho0.cols() != spec.dim()) {
    fail(ErrorKind::Shape, "evolve: state and generator dimensions differ");
  }
  if (t == 0.0) return rho0;
  if (const auto* step = std::get_if<RK4>(&method)) {
    spec.validate();
    return rk4(spec, rho0, t, step->dt);
  }
  const Liouvillian l = liouvillian_matrix(spec);
  return unvec(expm(l.mat * t) * vec(rho0), spec.dim());
}

DensityMatrix evolve(const DensityMatrix& rho0, const GKLSSpec& spec, double t,
                     const Method& method) {
  return DensityMatrix(propagate(rho0.mat(), spec, t, method), kEvolvedTolerance);
}

FiberField fiberwise_evolve(const BlochModel& model, const FiberField& field, double t,
                            const Method& method, unsigned threads) {
  field.validate();
  FiberField out{field.grid, FiberKind::Density, std::vector<Matrix>(field.values.size())};
  parallel_for(field.values.size(), threads, [&](std::size_t i) {
    const auto eps = field.grid.point(i);
    const GKLSSpec spec{model.hamiltonian(eps), model.jump_operators(eps)};
    try {
      out.values[i] = evolve(DensityMatrix(field.values[i], kEvolvedTolerance), spec, t, method).mat();
    } catch (const Error& e) {
      std::string where = "(";
      const auto c = field.grid.coords(i);
      for (std::size_t a = 0; a < c.size(); ++a) where += (a ? ", " : "") + std::to_string(c[a]);
      throw Error(e.kind(), "node " + where + "): " + e.what());
    }
  });
  return out;
}

TrajectoryRecord invariance_experiment(const BlochModel& model, const FiberField& field0,
                                       const std::vector<double>& times,
                                       const ExperimentOptions& options) {
  field0.validate();
  if (field0.grid.rank() != 2 || field0.dim() != 2) {
    fail(ErrorKind::Precondition, "invariance_experiment: requires N = 2 on a 2D grid");
  }
  if (times.empty()) fail(ErrorKind::Validation, "invariance_experiment: no times");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0 || (k > 0 && !(times[k] > times[k - 1]))) {
      fail(ErrorKind::Validation, "invariance_experiment: times must be increasing and >= 0");
    }
  }

  const auto& grid = field0.grid;
  const std::size_t count = grid.node_count();
  std::vector<Liouvillian> generators(count);
  parallel_for(count, options.threads, [&](std::size_t i) {
    const auto eps = grid.point(i);
    generators[i] = liouvillian_matrix({model.hamiltonian(eps), model.jump_operators(eps)});
  });

  TrajectoryRecord record;
  std::vector<Matrix> current = field0.values;
  double clock = 0.0;
  std::optional<int> initial_degree;

  for (std::size_t step = 0; step < times.size(); ++step) {
    const double dt = times[step] - clock;
    if (dt > 0.0) {
      parallel_for(count, options.threads, [&](std::size_t i) {
        current[i] = unvec(expm(generators[i].mat * dt) * vec(current[i]), 2);
      });
    }
    clock = times[step];

    TrajectorySample s;
    s.time = clock;
    s.min_eig = std::numeric_limits<double>::infinity();
    s.min_dist_center = std::numeric_limits<double>::infinity();
    s.worst.min_eigenvalue = std::numeric_limits<double>::infinity();
    const Matrix centre = Matrix::Identity(2, 2) / 2.0;
    for (std::size_t i = 0; i < count; ++i) {
      const CptpDiagnostics d = cptp_diagnostics(current[i]);
      const double dist = hs_norm(current[i] - centre);
      const auto c = grid.coords(i);
      record.node_margins.push_back({clock, c[0], c[1], d.min_eigenvalue, dist});
      s.min_eig = std::min(s.min_eig, d.min_eigenvalue);
      s.min_dist_center = std::min(s.min_dist_center, dist);
      s.worst.trace_error = std::max(s.worst.trace_error, d.trace_error);
      s.worst.hermiticity = std::max(s.worst.hermiticity, d.hermiticity);
      s.worst.min_eigenvalue = std::min(s.worst.min_eigenvalue, d.min_eigenvalue);
    }
    s.margins_ok = s.min_eig > options.margin_threshold &&
                   s.min_dist_center > options.margin_threshold;

    FiberField snapshot{grid, FiberKind::Density, current};
    try {
      const DegreeResult deg = mapping_degree(snapshot, options.threads);
      s.degree = deg.degree;
      s.degree_residual = deg.residual;
    } catch (const Error&) {
      s.degree.reset();
    }

    if (!record.samples.empty()) {
      const auto& prev = record.samples.back();
      s.transition_window = prev.margins_ok != s.margins_ok;
      if (prev.margins_ok && s.margins_ok && prev.degree != s.degree) {
        record.violations.emplace_back(prev.time, s.time);
      }
    }
    if (!s.margins_ok && !record.first_crossing) record.first_crossing = s.time;
    if (step == 0) initial_degree = s.degree;
    if (s.degree && initial_degree && *s.degree != *initial_degree &&
        !record.first_degree_change) {
      record.first_degree_change = s.time;
    }

    if (options.keep_states) record.states.push_back(std::move(snapshot));
    record.samples.push_back(std::move(s));
  }
  return record;
}

JumpMap band_projector_jumps(const BlochModel& model, double gamma) {
  if (gamma < 0.0) fail(ErrorKind::Domain, "band_projector_jumps: gamma must be >= 0");
  const double amp = std::sqrt(gamma);
  return [model, amp](std::span<const double> eps) {
    return std::vector<Matrix>{amp * band_projector(model, eps, 0).mat()};
  };
}

JumpMap depolarizing_jumps(double gamma) {
  if (gamma < 0.0) fail(ErrorKind::Domain, "depolarizing_jumps: gamma must be >= 0");
  const double amp = 0.5 * std::sqrt(gamma);
  return [amp](std::span<const double>) {
    return std::vector<Matrix>{amp * pauli::x(), amp * pauli::y(), amp * pauli::z()};
  };
}

BlochModel with_jumps(BlochModel model, JumpMap jumps) {
  model.jumps = std::move(jumps);
  return model;
}

}  // namespace qgeo
