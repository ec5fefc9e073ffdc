#include "qgeo/geometry.hpp"

#include <cmath>
#include <string>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

void require_same_shape(const Amplitude& m, const Matrix& x, const char* who) {
  if (x.rows() != m.dim() || x.cols() != m.dim()) {
    fail(ErrorKind::Shape, std::string(who) + ": tangent does not match amplitude");
  }
}

// Solves A C + C A = B for Hermitian positive definite C by dividing in the
// eigenbasis of C: A'_jk = B'_jk / (c_j + c_k).
Matrix solve_sylvester_eigenbasis(const Matrix& c, const Matrix& b) {
  const auto [values, vectors] = eigh(c);
  Matrix rotated = vectors.adjoint() * b * vectors;
  const Eigen::Index n = values.size();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double denom = values[j] + values[k];
      if (!(denom > 1e-12)) {
        fail(ErrorKind::Degeneracy, "uhlmann_connection: c_j + c_k vanishes");
      }
      rotated(j, k) /= denom;
    }
  }
  return vectors * rotated * vectors.adjoint();
}

// Same equation as a dense n^2 x n^2 linear system
// (I (x) C + C^T (x) I) vec(A) = vec(B).
Matrix solve_sylvester_dense(const Matrix& c, const Matrix& b) {
  const Eigen::Index n = c.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix op = kron(id, c) + kron(c.transpose(), id);
  Eigen::FullPivLU<Matrix> lu(op);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) {
    fail(ErrorKind::Degeneracy, "uhlmann_connection: Sylvester operator is singular");
  }
  return unvec(lu.solve(vec(b)), n);
}

}  // namespace

ConnectionValue::ConnectionValue(Matrix mat) : mat_(std::move(mat)) {
  if (max_abs(mat_ + mat_.adjoint()) > 1e-10 * std::max(1.0, max_abs(mat_))) {
    fail(ErrorKind::Validation, "ConnectionValue: not anti-Hermitian");
  }
}

ConnectionComponents ambient_connection_components(const AmbientTangent& t) {
  const Vector& z = t.base.entries();
  if (t.vec.size() != z.size()) fail(ErrorKind::Shape, "ambient connection: size mismatch");
  const double nz = z.squaredNorm();
  if (!(nz > 0.0)) fail(ErrorKind::Domain, "ambient connection: zero base vector");
  const cplx pairing = z.dot(t.vec) / nz;  // <z|v>/<z|z>
  return {pairing.real(), pairing.imag()};
}

cplx fs_metric(const PureState& z, const Vector& u, const Vector& v) {
  const Vector& zz = z.rep();
  if (u.size() != zz.size() || v.size() != zz.size()) {
    fail(ErrorKind::Shape, "fs_metric: size mismatch");
  }
  return u.dot(v) - u.dot(zz) * zz.dot(v);
}

bool loop_is_closed(const PureLoop& loop, double tol) {
  if (loop.samples.size() < 2) return false;
  const Vector& a = loop.samples.front().rep();
  const Vector& b = loop.samples.back().rep();
  return max_abs(a * a.adjoint() - b * b.adjoint()) <= tol;
}

bool loop_is_closed(const MixedLoop& loop, double tol) {
  if (loop.samples.size() < 2) return false;
  return max_abs(loop.samples.front().mat() - loop.samples.back().mat()) <= tol;
}

namespace {

template <class Loop>
void check_loop(const Loop& loop, const char* who) {
  if (loop.samples.size() < 3) {
    fail(ErrorKind::Precondition, std::string(who) + ": loop needs K >= 2 steps");
  }
  if (!loop.params.empty() && loop.params.size() != loop.samples.size()) {
    fail(ErrorKind::Shape, std::string(who) + ": params and samples differ in length");
  }
  if (!loop.closed || !loop_is_closed(loop)) {
    fail(ErrorKind::Precondition, std::string(who) + ": loop is not closed");
  }
  const auto n = loop.samples.front().dim();
  for (const auto& s : loop.samples) {
    if (s.dim() != n) fail(ErrorKind::Shape, std::string(who) + ": mixed dimensions");
  }
}

}  // namespace

HolonomyResult aa_phase(const PureLoop& loop) {
  check_loop(loop, "aa_phase");
  const std::size_t steps = loop.samples.size() - 1;
  cplx product = 1.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const Vector& a = loop.samples[k].rep();
    const Vector& b = loop.samples[(k + 1) % steps].rep();
    const cplx overlap = a.dot(b);
    const double mod = std::abs(overlap);
    if (mod <= 1e-8) {
      fail(ErrorKind::IllConditioned,
           "aa_phase: samples " + std::to_string(k) + " and " + std::to_string(k + 1) +
               " are orthogonal");
    }
    // Renormalize each factor; only the argument is accumulated.
    product *= overlap / mod;
  }
  // The discrete horizontal lift psi_k has <psi_k|psi_{k+1}> > 0, so the
  // holonomy arg <psi_0|psi_K> is minus the argument of the overlap chain.
  HolonomyResult out;
  out.phase = wrap_angle(-std::arg(product));
  out.holonomy = Matrix::Constant(1, 1, std::polar(1.0, out.phase));
  out.mesh = static_cast<int>(steps);
  return out;
}

ConnectionValue uhlmann_connection(const Amplitude& m, const Matrix& dm,
                                   UhlmannAlgorithm algorithm) {
  require_same_shape(m, dm, "uhlmann_connection");
  const Matrix& mm = m.mat();
  const Matrix c = m.gram();
  const Matrix b = mm.adjoint() * dm - dm.adjoint() * mm;
  Matrix a = algorithm == UhlmannAlgorithm::Eigenbasis ? solve_sylvester_eigenbasis(c, b)
                                                       : solve_sylvester_dense(c, b);
  // The exact solution is anti-Hermitian; strip the roundoff.
  a = 0.5 * (a - a.adjoint()).eval();
  return ConnectionValue(std::move(a));
}

ConnectionValue uhlmann_connection(const MatrixTangent& t, UhlmannAlgorithm algorithm) {
  return uhlmann_connection(t.base, t.vec, algorithm);
}

Matrix horizontal_project(const Amplitude& m, const Matrix& x) {
  require_same_shape(m, x, "horizontal_project");
  // A_U(X) = i phi for the vertical part i M phi.
  const Matrix a = uhlmann_connection(m, x).mat();
  return x - m.mat() * a;
}

double uhlmann_residual(const Amplitude& m, const Matrix& dm, const Matrix& a) {
  const Matrix c = m.gram();
  const Matrix& mm = m.mat();
  return max_abs(a * c + c * a - (mm.adjoint() * dm - dm.adjoint() * mm));
}

double horizontality_residual(const Amplitude& m, const Matrix& x) {
  const Matrix& mm = m.mat();
  return max_abs(x.adjoint() * mm - mm.adjoint() * x);
}

std::vector<Matrix> path_derivatives(const std::vector<Matrix>& path,
                                     const std::vector<double>& params) {
  const std::size_t n = path.size();
  if (n < 2) fail(ErrorKind::Precondition, "path_derivatives: need at least two samples");
  if (params.size() != n) fail(ErrorKind::Shape, "path_derivatives: params length");
  std::vector<Matrix> out(n);
  out[0] = (path[1] - path[0]) / (params[1] - params[0]);
  out[n - 1] = (path[n - 1] - path[n - 2]) / (params[n - 1] - params[n - 2]);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    out[k] = (path[k + 1] - path[k - 1]) / (params[k + 1] - params[k - 1]);
  }
  return out;
}

namespace {

void check_mixed_loop(const MixedLoop& loop, double rank_tol) {
  check_loop(loop, "uhlmann_transport");
  for (std::size_t k = 0; k < loop.samples.size(); ++k) {
    const auto& rho = loop.samples[k];
    if (rho.eigenvalues().minCoeff() <= rank_tol) {
      fail(ErrorKind::Stratum,
           "uhlmann_transport: sample " + std::to_string(k) + " is not full rank");
    }
    const auto n = rho.dim();
    const Matrix centre = Matrix::Identity(n, n) / static_cast<double>(n);
    if (hs_norm(rho.mat() - centre) <= 1e-10) {
      fail(ErrorKind::CentralState,
           "uhlmann_transport: sample " + std::to_string(k) + " is maximally mixed");
    }
  }
}

HolonomyResult finish(const Matrix& rho0, Matrix v, int mesh) {
  HolonomyResult out;
  out.phase = wrap_angle(std::arg((rho0 * v).trace()));
  out.holonomy = std::move(v);
  out.mesh = mesh;
  return out;
}

}  // namespace

std::vector<Matrix> uhlmann_lift(const MixedLoop& loop, double rank_tol) {
  check_mixed_loop(loop, rank_tol);
  std::vector<Matrix> roots;
  roots.reserve(loop.samples.size());
  for (const auto& rho : loop.samples) roots.push_back(sqrtm_psd(rho.mat()));

  std::vector<Matrix> lift;
  lift.reserve(roots.size());
  Matrix v = Matrix::Identity(roots[0].rows(), roots[0].cols());
  lift.push_back(roots[0]);
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
    // W_k^dagger W_{k+1} = V_k^dagger (sqrt rho_k sqrt rho_{k+1} U) V_k is
    // positive when U is the unitary polar factor of sqrt rho_{k+1} sqrt rho_k.
    v = polar_decompose(roots[k + 1] * roots[k]).unitary * v;
    lift.push_back(roots[k + 1] * v);
  }
  return lift;
}

HolonomyResult uhlmann_transport(const MixedLoop& loop, TransportMethod method,
                                 double rank_tol) {
  const int steps = static_cast<int>(loop.samples.size()) - 1;
  if (method == TransportMethod::PolarAlignment) {
    const std::vector<Matrix> lift = uhlmann_lift(loop, rank_tol);
    const Matrix root0 = lift.front();
    // W_K = sqrt(rho_0) V_K, so V_K = root0^{-1} W_K.
    Matrix v = root0.partialPivLu().solve(lift.back());
    return finish(loop.samples.front().mat(), std::move(v), steps);
  }

  check_mixed_loop(loop, rank_tol);
  // Canonical section on the loop with the closing sample dropped; tangents
  // by periodic central differences, scaled to one parameter step (uniform
  // spacing assumed).
  std::vector<Amplitude> sections;
  sections.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    sections.push_back(canonical_amplitude(loop.samples[static_cast<std::size_t>(k)], rank_tol));
  }
  const auto n = loop.samples.front().dim();
  Matrix v = Matrix::Identity(n, n);
  for (int k = 0; k < steps; ++k) {
    const auto& next = sections[static_cast<std::size_t>((k + 1) % steps)].mat();
    const auto& prev = sections[static_cast<std::size_t>((k + steps - 1) % steps)].mat();
    const Matrix dm = 0.5 * (next - prev);
    const Matrix a = uhlmann_connection(sections[static_cast<std::size_t>(k)], dm).mat();
    v = expm(-a) * v;
  }
  return finish(loop.samples.front().mat(), std::move(v), steps);
}

}  // namespace qgeo
