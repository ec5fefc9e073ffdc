#include "qgeo/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeo/error.hpp"
#include "qgeo/parallel.hpp"

namespace qgeo {

Matrix BlochModel::hamiltonian(std::span<const double> eps) const {
  if (static_cast<int>(eps.size()) != dim) {
    fail(ErrorKind::Shape, "BlochModel: momentum has wrong dimension");
  }
  Matrix h = h_fiber(eps);
  if (h.rows() != bands || h.cols() != bands) {
    fail(ErrorKind::Shape, "BlochModel: fiber Hamiltonian has wrong size");
  }
  if (!is_hermitian(h)) fail(ErrorKind::Validation, "BlochModel: fiber is not Hermitian");
  return h;
}

std::vector<Matrix> BlochModel::jump_operators(std::span<const double> eps) const {
  if (!jumps) return {};
  return jumps(eps);
}

namespace {

Matrix bloch_hamiltonian(double dx, double dy, double dz) {
  return dx * pauli::x() + dy * pauli::y() + dz * pauli::z();
}

}  // namespace

BlochModel qwz_model(double m) {
  BlochModel model;
  model.bands = 2;
  model.dim = 2;
  model.name = "qwz(m=" + std::to_string(m) + ")";
  model.h_fiber = [m](std::span<const double> e) {
    return bloch_hamiltonian(std::sin(e[0]), std::sin(e[1]), m + std::cos(e[0]) + std::cos(e[1]));
  };
  return model;
}

BlochModel two_band_model(const std::array<std::vector<Harmonic>, 3>& d, int dim) {
  for (const auto& comp : d) {
    for (const auto& h : comp) {
      if (static_cast<int>(h.n.size()) != dim) {
        fail(ErrorKind::Validation, "two_band_model: harmonic has wrong dimension");
      }
    }
  }
  BlochModel model;
  model.bands = 2;
  model.dim = dim;
  model.name = "two_band_d";
  model.h_fiber = [d](std::span<const double> e) {
    std::array<double, 3> v{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < 3; ++a) {
      for (const auto& h : d[a]) {
        double phase = 0.0;
        for (std::size_t k = 0; k < h.n.size(); ++k) phase += h.n[k] * e[k];
        v[a] += h.cos_coeff * std::cos(phase) + h.sin_coeff * std::sin(phase);
      }
    }
    return bloch_hamiltonian(v[0], v[1], v[2]);
  };
  return model;
}

DensityMatrix band_projector(const BlochModel& model, std::span<const double> eps, int band,
                             double gap_tol) {
  if (band < 0 || band >= model.bands) fail(ErrorKind::Domain, "band_projector: band out of range");
  const auto [values, vectors] = eigh(model.hamiltonian(eps));
  const auto b = static_cast<Eigen::Index>(band);
  double gap = std::numeric_limits<double>::infinity();
  if (b > 0) gap = std::min(gap, values[b] - values[b - 1]);
  if (b + 1 < values.size()) gap = std::min(gap, values[b + 1] - values[b]);
  if (gap < gap_tol) {
    fail(ErrorKind::Degeneracy, "band_projector: band " + std::to_string(band) +
                                    " is degenerate (gap " + std::to_string(gap) + ")");
  }
  const Vector v = vectors.col(b);
  return DensityMatrix(v * v.adjoint());
}

FiberField band_projector_field(const BlochModel& model, const TorusGrid& grid, int band,
                                unsigned threads) {
  FiberField field{grid, FiberKind::Projector, std::vector<Matrix>(grid.node_count())};
  parallel_for(grid.node_count(), threads, [&](std::size_t i) {
    const auto eps = grid.point(i);
    field.values[i] = band_projector(model, eps, band).mat();
  });
  return field;
}

FiberField thermal_family(const BlochModel& model, double temperature, const TorusGrid& grid,
                          unsigned threads) {
  if (!(temperature > 0.0)) fail(ErrorKind::Domain, "thermal_family: temperature must be positive");
  FiberField field{grid, FiberKind::Density, std::vector<Matrix>(grid.node_count())};
  parallel_for(grid.node_count(), threads, [&](std::size_t i) {
    const auto eps = grid.point(i);
    field.values[i] = thermal_state(model.hamiltonian(eps), temperature).mat();
  });
  return field;
}

double min_gap(const BlochModel& model, const TorusGrid& grid, int band) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    const auto eps = grid.point(i);
    const RealVector e = eigh(model.hamiltonian(eps)).values;
    gap = std::min(gap, e[band + 1] - e[band]);
  }
  return gap;
}

void RingLattice::validate() const {
  if (cells < 2) fail(ErrorKind::Domain, "RingLattice: need at least two cells");
  if (orbitals < 1) fail(ErrorKind::Domain, "RingLattice: need at least one orbital");
  if (intra.rows() != orbitals || intra.cols() != orbitals || inter.rows() != orbitals ||
      inter.cols() != orbitals) {
    fail(ErrorKind::Shape, "RingLattice: hopping blocks must be N x N");
  }
  if (!is_hermitian(intra)) fail(ErrorKind::Validation, "RingLattice: intra block is not Hermitian");
  if (!(period > 0.0)) fail(ErrorKind::Domain, "RingLattice: period must be positive");
}

Matrix RingLattice::hamiltonian() const {
  validate();
  const int n = orbitals;
  Matrix h = Matrix::Zero(n * cells, n * cells);
  for (int j = 0; j < cells; ++j) {
    const int next = (j + 1) % cells;
    h.block(j * n, j * n, n, n) += intra;
    h.block(j * n, next * n, n, n) += inter;
    h.block(next * n, j * n, n, n) += inter.adjoint();
  }
  return h;
}

Matrix RingLattice::translation() const {
  validate();
  const int n = orbitals;
  Matrix t = Matrix::Zero(n * cells, n * cells);
  for (int j = 0; j < cells; ++j) {
    const int next = (j + 1) % cells;
    t.block(next * n, j * n, n, n) = Matrix::Identity(n, n);
  }
  return t;
}

std::vector<BlochFiber> bloch_decompose(const RingLattice& lattice) {
  lattice.validate();
  std::vector<BlochFiber> fibers;
  fibers.reserve(static_cast<std::size_t>(lattice.cells));
  for (int m = 0; m < lattice.cells; ++m) {
    const double eps = kTwoPi * m / (lattice.period * lattice.cells);
    const cplx phase = std::polar(1.0, lattice.period * eps);
    Matrix h = lattice.intra + phase * lattice.inter + std::conj(phase) * lattice.inter.adjoint();
    fibers.push_back({eps, std::move(h)});
  }
  return fibers;
}

RealVector fiber_spectrum(const std::vector<BlochFiber>& fibers) {
  std::vector<double> all;
  for (const auto& f : fibers) {
    const RealVector e = eigh(f.hamiltonian).values;
    all.insert(all.end(), e.data(), e.data() + e.size());
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<RealVector>(all.data(), static_cast<Eigen::Index>(all.size()));
}

double translation_invariance_check(const Matrix& h_full, const Matrix& shift) {
  if (h_full.rows() != shift.rows() || h_full.cols() != shift.cols() ||
      h_full.rows() != h_full.cols()) {
    fail(ErrorKind::Shape, "translation_invariance_check: dimension mismatch");
  }
  if (!is_unitary(shift, 1e-10)) {
    fail(ErrorKind::Validation, "translation_invariance_check: shift is not unitary");
  }
  return hs_norm(shift * h_full - h_full * shift);
}

}  // namespace qgeo
