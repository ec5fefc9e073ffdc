#pragma once

// Reference loops and fields used by the CLI, the tests and the benchmarks.

#include <array>
#include <vector>

#include "qgeo/geometry.hpp"
#include "qgeo/topology.hpp"

namespace qgeo {

std::array<double, 3> latitude_point(double theta, double phi);

// Spin-1/2 coherent state along the unit vector n.
PureState coherent_state(const std::array<double, 3>& n);

// -strength * n . sigma; ground state is the coherent state along n, gap 2*strength.
Matrix field_hamiltonian(const std::array<double, 3>& n, double strength);

// Coherent states along the circle of polar angle theta, phi = 2 pi k / steps,
// k = 0..steps; the closing sample repeats the first exactly.
PureLoop latitude_loop(double theta, int steps);

// Ground states of field_hamiltonian along the same circle (eigenvector
// gauge as returned by the eigensolver).
PureLoop ground_state_loop(double theta, int steps, double strength);

// Thermal states of field_hamiltonian along the same circle.
MixedLoop thermal_loop(double theta, double temperature, int steps, double strength);

// Closed geodesic polygon through the given Bloch-sphere vertices, with
// `steps_per_edge` samples per edge.
PureLoop geodesic_polygon_loop(const std::vector<std::array<double, 3>>& vertices,
                               int steps_per_edge);

// Smooth full-rank density-matrix fields on a 2D torus.
//   0: qubit, thermal state of H = d(eps).sigma with d = (sin e1, sin e2, 1 + cos e1 + cos e2), T = 1
//   1: qutrit, thermal state of cos(e1) L1 + sin(e2) L4 + cos(e1 + e2) L6 + 0.3 L3 + 0.2 L8
//      (Gell-Mann basis), T = 0.7
//   2: qubit, (I + r.sigma)/2 with r = 0.6 * (sin e1 cos e2, sin e1 sin e2 + 0.3 sin e2, cos e1) / |.|
FiberField smooth_family(int id, const TorusGrid& grid);
inline constexpr int kSmoothFamilyCount = 3;

// rho(eps) = U diag(p(eps)) U^dagger with a fixed unitary U (commuting family).
FiberField commuting_family(const TorusGrid& grid, int n = 3);

}  // namespace qgeo
