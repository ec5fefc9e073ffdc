#pragma once

// Dense complex linear algebra shared by all modules. Matrix functions of
// Hermitian arguments go through the eigendecomposition; general
// exponentials and logarithms use Eigen's MatrixFunctions module.

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace qgeo {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Eigenvalues at or above -kPsdClamp are treated as zero inside PSD
// square roots.
inline constexpr double kPsdClamp = 1e-12;

namespace pauli {
Matrix x();
Matrix y();
Matrix z();
Matrix identity();
}  // namespace pauli

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns are orthonormal eigenvectors
};

HermitianEigen eigh(const Matrix& h);

// max_ij |A - A^dagger|
double hermiticity_residual(const Matrix& a);
double max_abs(const Matrix& a);
bool is_hermitian(const Matrix& a, double rel_tol = 1e-12);
bool is_unitary(const Matrix& u, double tol = 1e-10);

Matrix hermitian_part(const Matrix& a);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-kPsdClamp, 0) are clamped; anything more negative is rejected.
Matrix sqrtm_psd(const Matrix& h);

// exp(h) for Hermitian h.
Matrix expm_hermitian(const Matrix& h);

// exp(a) and principal log(a) for general square matrices.
Matrix expm(const Matrix& a);
Matrix logm(const Matrix& a);

// Frobenius (Hilbert-Schmidt) norm.
double hs_norm(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization: vec(A)[i + n*j] = A(i, j).
Vector vec(const Matrix& a);
Matrix unvec(const Vector& v, Eigen::Index n);

// Wrap an angle into (-pi, pi].
double wrap_angle(double phi);

}  // namespace qgeo
