#include "qgeo/topology.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qgeo/error.hpp"
#include "qgeo/geometry.hpp"
#include "qgeo/parallel.hpp"

namespace qgeo {

TorusGrid::TorusGrid(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) fail(ErrorKind::Validation, "TorusGrid: no axes");
  count_ = 1;
  for (int k : dims_) {
    if (k < 4) {
      fail(ErrorKind::Admissibility,
           "TorusGrid: axis size " + std::to_string(k) + " is below the minimum of 4");
    }
    count_ *= static_cast<std::size_t>(k);
  }
}

std::size_t TorusGrid::index(std::span<const int> coords) const {
  if (coords.size() != dims_.size()) fail(ErrorKind::Shape, "TorusGrid: wrong coordinate rank");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    const int k = dims_[a];
    const int c = ((coords[a] % k) + k) % k;
    idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
  }
  return idx;
}

std::vector<int> TorusGrid::coords(std::size_t index) const {
  std::vector<int> c(dims_.size());
  for (std::size_t a = dims_.size(); a-- > 0;) {
    const auto k = static_cast<std::size_t>(dims_[a]);
    c[a] = static_cast<int>(index % k);
    index /= k;
  }
  return c;
}

std::vector<double> TorusGrid::point(std::size_t index) const {
  const auto c = coords(index);
  std::vector<double> eps(c.size());
  for (std::size_t a = 0; a < c.size(); ++a) eps[a] = spacing(a) * c[a];
  return eps;
}

std::size_t TorusGrid::index2(int i, int j) const {
  if (dims_.size() != 2) fail(ErrorKind::Precondition, "TorusGrid: not two-dimensional");
  const int k0 = dims_[0];
  const int k1 = dims_[1];
  const int a = ((i % k0) + k0) % k0;
  const int b = ((j % k1) + k1) % k1;
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(k1) +
         static_cast<std::size_t>(b);
}

void FiberField::validate() const {
  if (values.size() != grid.node_count()) {
    fail(ErrorKind::Shape, "FiberField: expected " + std::to_string(grid.node_count()) +
                               " values, got " + std::to_string(values.size()));
  }
  const auto n = values.front().rows();
  for (const auto& v : values) {
    if (v.rows() != n || v.cols() != n) fail(ErrorKind::Shape, "FiberField: ragged values");
  }
}

namespace {

std::string node_name(const TorusGrid& grid, std::size_t idx) {
  const auto c = grid.coords(idx);
  std::string s = "(";
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (a) s += ", ";
    s += std::to_string(c[a]);
  }
  return s + ")";
}

void require_2d(const FiberField& field, const char* who) {
  field.validate();
  if (field.grid.rank() != 2) {
    fail(ErrorKind::Precondition, std::string(who) + ": requires a 2D grid");
  }
}

Vector projector_vector(const Matrix& p, const TorusGrid& grid, std::size_t idx) {
  if (max_abs(p * p - p) > 1e-8 || std::abs(p.trace() - 1.0) > 1e-8 ||
      hermiticity_residual(p) > 1e-8) {
    fail(ErrorKind::Validation, "chern_fhs: node " + node_name(grid, idx) +
                                    " is not a rank-1 projector");
  }
  Eigen::Index best = 0;
  p.colwise().norm().maxCoeff(&best);
  return p.col(best).normalized();
}

std::vector<Matrix> node_roots(const FiberField& field, double rank_tol, const char* who,
                               unsigned threads) {
  std::vector<Matrix> roots(field.values.size());
  parallel_for(field.values.size(), threads, [&](std::size_t i) {
    const auto [values, vectors] = eigh(field.values[i]);
    if (values.minCoeff() <= rank_tol) {
      fail(ErrorKind::Stratum, std::string(who) + ": node " + node_name(field.grid, i) +
                                   " is not full rank");
    }
    const RealVector r = values.array().sqrt();
    roots[i] = vectors * r.cast<cplx>().asDiagonal() * vectors.adjoint();
  });
  return roots;
}

double ordered_sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

CurvatureField fhs_curvature(const FiberField& field, unsigned threads) {
  require_2d(field, "chern_fhs");
  const auto& grid = field.grid;
  const std::size_t count = grid.node_count();

  std::vector<Vector> states(count);
  parallel_for(count, threads,
               [&](std::size_t i) { states[i] = projector_vector(field.values[i], grid, i); });

  auto link = [&](std::size_t a, std::size_t b) {
    const cplx u = states[a].dot(states[b]);
    const double mod = std::abs(u);
    if (mod < 1e-10) {
      fail(ErrorKind::Admissibility, "chern_fhs: vanishing link between nodes " +
                                         node_name(grid, a) + " and " + node_name(grid, b) +
                                         " (mesh too coarse)");
    }
    return u / mod;
  };

  CurvatureField out{grid, std::vector<double>(count), {}};
  parallel_for(count, threads, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const int i = c[0];
    const int j = c[1];
    const std::size_t n00 = grid.index2(i, j);
    const std::size_t n10 = grid.index2(i + 1, j);
    const std::size_t n11 = grid.index2(i + 1, j + 1);
    const std::size_t n01 = grid.index2(i, j + 1);
    // U_1(n) U_2(n+e1) U_1(n+e2)^{-1} U_2(n)^{-1}; the plaquette flux is the
    // holonomy phase of this loop, i.e. minus the Wilson-loop argument.
    const cplx loop = link(n00, n10) * link(n10, n11) * link(n11, n01) * link(n01, n00);
    out.scalar[idx] = wrap_angle(-std::arg(loop));
  });
  return out;
}

int chern_fhs(const FiberField& field, unsigned threads) {
  const CurvatureField f = fhs_curvature(field, threads);
  return static_cast<int>(std::lround(ordered_sum(f.scalar) / kTwoPi));
}

CurvatureField uhlmann_curvature(const FiberField& field, unsigned threads, double rank_tol) {
  require_2d(field, "uhlmann_curvature");
  const auto& grid = field.grid;
  const std::size_t count = grid.node_count();
  const std::vector<Matrix> roots = node_roots(field, rank_tol, "uhlmann_curvature", threads);

  // links[2 * n + mu]: transporter from n to n + e_mu.
  std::vector<Matrix> links(2 * count);
  parallel_for(count, threads, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    for (int mu = 0; mu < 2; ++mu) {
      const std::size_t next = mu == 0 ? grid.index2(c[0] + 1, c[1]) : grid.index2(c[0], c[1] + 1);
      const Amplitude mid(0.5 * (roots[idx] + roots[next]));
      const Matrix a = uhlmann_connection(mid, roots[next] - roots[idx]).mat();
      links[2 * idx + static_cast<std::size_t>(mu)] = expm(-a);
    }
  });

  CurvatureField out{grid, {}, std::vector<Matrix>(count)};
  parallel_for(count, threads, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const std::size_t n10 = grid.index2(c[0] + 1, c[1]);
    const std::size_t n01 = grid.index2(c[0], c[1] + 1);
    const Matrix& u1 = links[2 * idx];
    const Matrix& u2_right = links[2 * n10 + 1];
    const Matrix& u1_top = links[2 * n01];
    const Matrix& u2 = links[2 * idx + 1];
    const Matrix hol = u2.adjoint() * u1_top.adjoint() * u2_right * u1;
    out.matrix[idx] = logm(hol);
  });
  return out;
}

double uhlmann_chern_trace(const FiberField& field, unsigned threads, double rank_tol) {
  const CurvatureField f = uhlmann_curvature(field, threads, rank_tol);
  std::vector<double> parts(f.matrix.size());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = f.matrix[i].trace().imag();
  return ordered_sum(parts) / kTwoPi;
}

double weighted_chern(const FiberField& field, unsigned threads, double rank_tol) {
  const CurvatureField f = uhlmann_curvature(field, threads, rank_tol);
  std::vector<double> parts(f.matrix.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = (field.values[i] * f.matrix[i]).trace().imag();
  }
  return ordered_sum(parts) / kTwoPi;
}

double winding_literal(const FiberField& field, unsigned threads, double rank_tol) {
  require_2d(field, "winding_literal");
  const auto& grid = field.grid;
  const std::size_t count = grid.node_count();
  const double d1 = grid.spacing(0);
  const double d2 = grid.spacing(1);

  std::vector<Matrix> inverses(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const auto [values, vectors] = eigh(field.values[i]);
    if (values.minCoeff() <= rank_tol) {
      fail(ErrorKind::Stratum,
           "winding_literal: node " + node_name(grid, i) + " is not full rank");
    }
    const RealVector inv = values.cwiseInverse();
    inverses[i] = vectors * inv.cast<cplx>().asDiagonal() * vectors.adjoint();
  });

  std::vector<double> parts(count);
  parallel_for(count, threads, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const auto& v = field.values;
    const Matrix dr1 = (v[grid.index2(c[0] + 1, c[1])] - v[grid.index2(c[0] - 1, c[1])]) / (2 * d1);
    const Matrix dr2 = (v[grid.index2(c[0], c[1] + 1)] - v[grid.index2(c[0], c[1] - 1)]) / (2 * d2);
    const Matrix w1 = inverses[idx] * dr1;
    const Matrix w2 = inverses[idx] * dr2;
    parts[idx] = (w1 * w2 - w2 * w1).trace().real() * d1 * d2;
  });
  return ordered_sum(parts) / kTwoPi;
}

double signed_solid_angle(const std::array<double, 3>& a, const std::array<double, 3>& b,
                          const std::array<double, 3>& c) {
  auto dot = [](const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  const std::array<double, 3> bxc{b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2],
                                  b[0] * c[1] - b[1] * c[0]};
  const double num = dot(a, bxc);
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

DegreeResult mapping_degree(const FiberField& field, unsigned threads, double rank_tol) {
  require_2d(field, "mapping_degree");
  if (field.dim() != 2) fail(ErrorKind::Precondition, "mapping_degree: requires N = 2");
  const auto& grid = field.grid;
  const std::size_t count = grid.node_count();

  std::vector<std::array<double, 3>> dirs(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const Matrix& m = field.values[i];
    const std::array<double, 3> r{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                                  (m(0, 0) - m(1, 1)).real()};
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (len <= 1e-8) {
      fail(ErrorKind::CentralState,
           "mapping_degree: node " + node_name(grid, i) + " is at the maximally mixed state");
    }
    // Smallest eigenvalue (1 - |r|)/2 against the rank tolerance.
    if (0.5 * (1.0 - len) <= rank_tol) {
      fail(ErrorKind::Stratum, "mapping_degree: node " + node_name(grid, i) + " is pure");
    }
    dirs[i] = {r[0] / len, r[1] / len, r[2] / len};
  });

  std::vector<double> parts(count);
  parallel_for(count, threads, [&](std::size_t idx) {
    const auto c = grid.coords(idx);
    const auto& a = dirs[idx];
    const auto& b = dirs[grid.index2(c[0] + 1, c[1])];
    const auto& d = dirs[grid.index2(c[0] + 1, c[1] + 1)];
    const auto& e = dirs[grid.index2(c[0], c[1] + 1)];
    parts[idx] = signed_solid_angle(a, b, d) + signed_solid_angle(a, d, e);
  });

  // Outward-oriented area counts the covering positively; the line bundle
  // of the aligned projector has the opposite first Chern number, and the
  // reported degree follows the Chern sign.
  DegreeResult out;
  out.raw = -ordered_sum(parts) / (4.0 * kPi);
  out.degree = static_cast<int>(std::lround(out.raw));
  out.residual = std::abs(out.raw - out.degree);
  if (out.residual > 1e-3) {
    fail(ErrorKind::Admissibility, "mapping_degree: rounding residual " +
                                       std::to_string(out.residual) + " (mesh too coarse)");
  }
  return out;
}

StrataMargins strata_distance(const DensityMatrix& rho) {
  const auto n = rho.dim();
  const Matrix centre = Matrix::Identity(n, n) / static_cast<double>(n);
  return {std::max(rho.eigenvalues().minCoeff(), 0.0), hs_norm(rho.mat() - centre)};
}

}  // namespace qgeo
