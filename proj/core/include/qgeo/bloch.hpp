#pragma once

// Translation-invariant lattice models in momentum space.
//
// Brillouin-zone coordinates are stored as a*eps in [0, 2pi), so grids do
// not depend on the lattice period.

#include <functional>
#include <string>
#include <vector>

#include "qgeo/topology.hpp"

namespace qgeo {

using FiberMap = std::function<Matrix(std::span<const double>)>;
using JumpMap = std::function<std::vector<Matrix>(std::span<const double>)>;

struct BlochModel {
  int bands = 0;
  int dim = 0;
  FiberMap h_fiber;
  JumpMap jumps;  // empty: closed system
  std::string name;

  Matrix hamiltonian(std::span<const double> eps) const;
  std::vector<Matrix> jump_operators(std::span<const double> eps) const;
};

// One harmonic term c*cos(n.eps) + s*sin(n.eps) of a Bloch-vector component.
struct Harmonic {
  std::vector<int> n;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

// H = d(eps) . sigma with d = (sin e1, sin e2, m + cos e1 + cos e2).
BlochModel qwz_model(double m);

// H = d(eps) . sigma with each component a finite harmonic sum.
BlochModel two_band_model(const std::array<std::vector<Harmonic>, 3>& d, int dim = 2);

// Rank-1 projector onto the band-th eigenvector (ascending energies).
DensityMatrix band_projector(const BlochModel& model, std::span<const double> eps, int band,
                             double gap_tol = 1e-8);

FiberField band_projector_field(const BlochModel& model, const TorusGrid& grid, int band,
                                unsigned threads = 1);

FiberField thermal_family(const BlochModel& model, double temperature, const TorusGrid& grid,
                          unsigned threads = 1);

// Minimum over grid nodes of the spectral gap above `band`.
double min_gap(const BlochModel& model, const TorusGrid& grid, int band = 0);

// Nearest-neighbour ring of L cells with N orbitals each. The real-space
// Hamiltonian has diagonal blocks `intra`, blocks (j, j+1) equal to
// `inter` and (j+1, j) equal to inter^dagger, periodic in j.
struct RingLattice {
  int cells = 0;
  int orbitals = 0;
  Matrix intra;
  Matrix inter;
  double period = 1.0;

  void validate() const;
  Matrix hamiltonian() const;
  // Cell shift (T z)_j = z_{j-1}.
  Matrix translation() const;
};

struct BlochFiber {
  double eps = 0.0;  // quasi-momentum 2 pi m / (a L)
  Matrix hamiltonian;
};

// H_eps = intra + e^{i a eps} inter + e^{-i a eps} inter^dagger at the L
// allowed momenta.
std::vector<BlochFiber> bloch_decompose(const RingLattice& lattice);

// Sorted concatenated fiber spectra.
RealVector fiber_spectrum(const std::vector<BlochFiber>& fibers);

// |T H - H T|_HS
double translation_invariance_check(const Matrix& h_full, const Matrix& shift);

}  // namespace qgeo
