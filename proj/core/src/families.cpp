#include "qgeo/families.hpp"

#include <algorithm>
#include <cmath>

#include "qgeo/error.hpp"

namespace qgeo {

std::array<double, 3> latitude_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

PureState coherent_state(const std::array<double, 3>& n) {
  const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
  const double phi = std::atan2(n[1], n[0]);
  Vector z(2);
  z << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return PureState::normalized(z);
}

Matrix field_hamiltonian(const std::array<double, 3>& n, double strength) {
  return -strength * (n[0] * pauli::x() + n[1] * pauli::y() + n[2] * pauli::z());
}

namespace {

std::vector<double> circle_params(int steps) {
  if (steps < 2) fail(ErrorKind::Precondition, "loop: need at least 2 steps");
  std::vector<double> params(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) params[static_cast<std::size_t>(k)] = kTwoPi * k / steps;
  return params;
}

}  // namespace

PureLoop latitude_loop(double theta, int steps) {
  PureLoop loop;
  loop.params = circle_params(steps);
  for (int k = 0; k < steps; ++k) {
    loop.samples.push_back(coherent_state(latitude_point(theta, loop.params[static_cast<std::size_t>(k)])));
  }
  loop.samples.push_back(loop.samples.front());
  return loop;
}

PureLoop ground_state_loop(double theta, int steps, double strength) {
  PureLoop loop;
  loop.params = circle_params(steps);
  for (int k = 0; k < steps; ++k) {
    const auto h = field_hamiltonian(latitude_point(theta, loop.params[static_cast<std::size_t>(k)]), strength);
    loop.samples.push_back(PureState::normalized(eigh(h).vectors.col(0)));
  }
  loop.samples.push_back(loop.samples.front());
  return loop;
}

MixedLoop thermal_loop(double theta, double temperature, int steps, double strength) {
  MixedLoop loop;
  loop.params = circle_params(steps);
  for (int k = 0; k < steps; ++k) {
    const auto h = field_hamiltonian(latitude_point(theta, loop.params[static_cast<std::size_t>(k)]), strength);
    loop.samples.push_back(thermal_state(h, temperature));
  }
  loop.samples.push_back(loop.samples.front());
  return loop;
}

PureLoop geodesic_polygon_loop(const std::vector<std::array<double, 3>>& vertices,
                               int steps_per_edge) {
  if (vertices.size() < 2 || steps_per_edge < 1) {
    fail(ErrorKind::Precondition, "geodesic_polygon_loop: need >= 2 vertices");
  }
  PureLoop loop;
  double s = 0.0;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto& a = vertices[v];
    const auto& b = vertices[(v + 1) % vertices.size()];
    const double cosw = std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0);
    const double omega = std::acos(cosw);
    if (std::sin(omega) < 1e-12) fail(ErrorKind::Precondition, "geodesic_polygon_loop: degenerate edge");
    for (int k = 0; k < steps_per_edge; ++k) {
      const double t = static_cast<double>(k) / steps_per_edge;
      const double wa = std::sin((1 - t) * omega) / std::sin(omega);
      const double wb = std::sin(t * omega) / std::sin(omega);
      const std::array<double, 3> p{wa * a[0] + wb * b[0], wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]};
      loop.samples.push_back(coherent_state(p));
      loop.params.push_back(s);
      s += 1.0;
    }
  }
  loop.samples.push_back(loop.samples.front());
  loop.params.push_back(s);
  return loop;
}

namespace {

Matrix gell_mann(int k) {
  Matrix m = Matrix::Zero(3, 3);
  switch (k) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 8:
      m(0, 0) = m(1, 1) = 1.0 / std::sqrt(3.0);
      m(2, 2) = -2.0 / std::sqrt(3.0);
      break;
    default: fail(ErrorKind::Domain, "gell_mann: index out of range");
  }
  return m;
}

}  // namespace

FiberField smooth_family(int id, const TorusGrid& grid) {
  if (grid.rank() != 2) fail(ErrorKind::Precondition, "smooth_family: requires a 2D grid");
  FiberField field{grid, FiberKind::Density, std::vector<Matrix>(grid.node_count())};
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    const auto e = grid.point(i);
    switch (id) {
      case 0: {
        const Matrix h = std::sin(e[0]) * pauli::x() + std::sin(e[1]) * pauli::y() +
                         (1.0 + std::cos(e[0]) + std::cos(e[1])) * pauli::z();
        field.values[i] = thermal_state(h, 1.0).mat();
        break;
      }
      case 1: {
        const Matrix h = std::cos(e[0]) * gell_mann(1) + std::sin(e[1]) * gell_mann(4) +
                         std::cos(e[0] + e[1]) * gell_mann(6) + 0.3 * gell_mann(3) +
                         0.2 * gell_mann(8);
        field.values[i] = thermal_state(h, 0.7).mat();
        break;
      }
      case 2: {
        std::array<double, 3> r{std::sin(e[0]) * std::cos(e[1]),
                                std::sin(e[0]) * std::sin(e[1]) + 0.3 * std::sin(e[1]),
                                std::cos(e[0])};
        const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        for (auto& c : r) c *= 0.6 / len;
        field.values[i] = from_bloch_vector(r).mat();
        break;
      }
      default: fail(ErrorKind::Domain, "smooth_family: unknown id");
    }
  }
  return field;
}

FiberField commuting_family(const TorusGrid& grid, int n) {
  if (grid.rank() != 2) fail(ErrorKind::Precondition, "commuting_family: requires a 2D grid");
  // Fixed unitary: exp(i H0) for a fixed Hermitian H0.
  Matrix h0 = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) h0(a, b) = cplx(std::cos(1.0 + a + 2 * b), a == b ? 0.0 : std::sin(0.5 + a - b));
  }
  h0 = hermitian_part(h0);
  const Matrix u = expm(kI * h0);
  FiberField field{grid, FiberKind::Density, std::vector<Matrix>(grid.node_count())};
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    const auto e = grid.point(i);
    RealVector p(n);
    for (int a = 0; a < n; ++a) p[a] = 1.0 + 0.5 * std::cos(e[0] + a) * std::sin(e[1] + 0.3 * a);
    p /= p.sum();
    field.values[i] = hermitian_part(u * p.cast<cplx>().asDiagonal() * u.adjoint());
  }
  return field;
}

}  // namespace qgeo
