#pragma once

// Invariants of matrix-valued fields over a discretized parameter torus.
//
// Orientation: axes are ordered (eps_1, eps_2) and every plaquette is
// traversed counterclockwise, n -> n+e1 -> n+e1+e2 -> n+e2 -> n.

#include <array>
#include <string>
#include <vector>

#include "qgeo/states.hpp"

namespace qgeo {

// Periodic grid over [0, 2pi)^d. Nodes are stored with the last axis
// varying fastest.
class TorusGrid {
 public:
  explicit TorusGrid(std::vector<int> dims);

  std::size_t rank() const noexcept { return dims_.size(); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int size(std::size_t axis) const { return dims_.at(axis); }
  double spacing(std::size_t axis) const { return kTwoPi / dims_.at(axis); }
  std::size_t node_count() const noexcept { return count_; }

  std::size_t index(std::span<const int> coords) const;
  std::vector<int> coords(std::size_t index) const;
  std::vector<double> point(std::size_t index) const;

  // 2D helpers with periodic wrap.
  std::size_t index2(int i, int j) const;

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

 private:
  std::vector<int> dims_;
  std::size_t count_ = 0;
};

enum class FiberKind { Projector, Density, Hermitian };

struct FiberField {
  TorusGrid grid;
  FiberKind kind = FiberKind::Density;
  std::vector<Matrix> values;  // one per node

  std::size_t dim() const { return values.empty() ? 0 : static_cast<std::size_t>(values.front().rows()); }
  // Throws unless there is one value per node of one common dimension.
  void validate() const;
};

struct CurvatureField {
  TorusGrid grid;
  std::vector<double> scalar;   // per plaquette, FHS phase in (-pi, pi]
  std::vector<Matrix> matrix;   // per plaquette, log of the plaquette holonomy
};

struct DegreeResult {
  int degree = 0;
  double raw = 0.0;       // (signed area sum) / 4pi before rounding
  double residual = 0.0;  // |raw - degree|
};

struct StrataMargins {
  double min_eig = 0.0;
  double dist_center = 0.0;
};

// Lattice field strength of the line bundle spanned by a rank-1 projector
// field. Links U_mu(n) = <z_n|z_{n+mu}>; the plaquette flux is
// -arg(U_1 U_2 U_1^{-1} U_2^{-1}) in (-pi, pi], the holonomy phase of the
// plaquette loop (Berry-curvature sign). The sum over plaquettes is 2 pi
// times an integer for any per-node gauge.
CurvatureField fhs_curvature(const FiberField& field, unsigned threads = 1);
int chern_fhs(const FiberField& field, unsigned threads = 1);

// Plaquette holonomies of the Uhlmann connection over the canonical section
// sqrt(rho). Links: exp(-A_U(Mbar; M_{n+mu} - M_n)), Mbar the link midpoint.
CurvatureField uhlmann_curvature(const FiberField& field, unsigned threads = 1,
                                 double rank_tol = kDefaultRankTol);

// (1/2pi) sum_P Im tr F_P with F_P = log(plaquette holonomy).
double uhlmann_chern_trace(const FiberField& field, unsigned threads = 1,
                           double rank_tol = kDefaultRankTol);

// (1/2pi) sum_P Im tr(rho_n F_P), rho_n at the plaquette's base corner.
double weighted_chern(const FiberField& field, unsigned threads = 1,
                      double rank_tol = kDefaultRankTol);

// (1/2pi) sum over cells of tr(w_1 w_2 - w_2 w_1) d1 d2 with
// w_mu = rho^{-1} d_mu rho by central differences.
double winding_literal(const FiberField& field, unsigned threads = 1,
                       double rank_tol = kDefaultRankTol);

// Degree of eps -> r(eps)/|r(eps)| for qubit fields rho = (I + r.sigma)/2,
// from signed spherical triangle areas (two triangles per cell). The sign
// is chosen so that a field and the projector family (I + rhat.sigma)/2
// give the same integer as chern_fhs.
// Nodes must satisfy |r| > 1e-8 (away from I/2) and (1 - |r|)/2 > rank_tol.
DegreeResult mapping_degree(const FiberField& field, unsigned threads = 1,
                            double rank_tol = kDefaultRankTol);

StrataMargins strata_distance(const DensityMatrix& rho);

// Signed solid angle of the spherical triangle (a, b, c) on the unit sphere.
double signed_solid_angle(const std::array<double, 3>& a, const std::array<double, 3>& b,
                          const std::array<double, 3>& c);

}  // namespace qgeo
