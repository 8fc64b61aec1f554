#pragma once

#include <Eigen/Dense>
#include <complex>

#include "menos/errors.hpp"

namespace menos {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Default numerical tolerances used across the library.
namespace tol {
inline constexpr double hermiticity = 1e-10;   // ‖H − H†‖_max at construction
inline constexpr double psd = 1e-10;           // admissible negative eigenvalue
inline constexpr double completeness = 1e-9;   // ‖Σ M_i − 1‖_max
inline constexpr double kernel = 1e-10;        // support cutoff for eigenvalues of ρ
inline constexpr double p_outcome = 1e-12;     // outcome probability considered zero
inline constexpr double dp_outcome = 1e-10;    // outcome derivative considered zero
inline constexpr double saturation = 1e-7;     // relative QCRB-saturation tolerance
}  // namespace tol

/// Dense complex Hermitian operator of small dimension.
///
/// Construction rejects non-finite entries and inputs further than
/// `hermiticity_tol` (entrywise) from their adjoint; the stored matrix is the
/// exact symmetrization (H + H†)/2, so downstream code may assume exact
/// Hermiticity.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix m, double hermiticity_tol = tol::hermiticity);

  static HermitianMatrix zero(Eigen::Index dim);
  static HermitianMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return mat_.rows(); }
  const CMatrix& mat() const { return mat_; }

  double trace() const { return mat_.trace().real(); }
  double max_abs() const { return mat_.cwiseAbs().maxCoeff(); }

 private:
  CMatrix mat_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);

/// Spectral decomposition of a Hermitian matrix.
struct EigenDecomposition {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns, col(k) paired with eigenvalues[k]
};

/// Eigendecomposition with ascending eigenvalues; deterministic for
/// bit-identical input.
EigenDecomposition eig_hermitian(const HermitianMatrix& h);

/// Trace norm Σ_k |λ_k| (= Tr √(H H†) for Hermitian H).
double trace_norm(const HermitianMatrix& h);

/// PSD square root. Eigenvalues in [−psd_tol, 0) are clamped to zero;
/// anything below −psd_tol throws NotPositiveSemidefinite.
HermitianMatrix psd_sqrt(const HermitianMatrix& p, double psd_tol = tol::psd);

/// Symmetric logarithmic derivative: the Hermitian Λ with
/// (ρΛ + Λρ)/2 = ρ̇ on the support of ρ. In the eigenbasis of ρ,
/// Λ_jk = 2 ρ̇_jk / (p_j + p_k) where p_j + p_k exceeds the kernel cutoff,
/// and 0 on the kernel-kernel block.
HermitianMatrix sld(const HermitianMatrix& rho, const HermitianMatrix& drho);

/// Quantum Fisher information Tr(ρΛ²) = Σ_{j,k} 2|ρ̇_jk|²/(p_j + p_k),
/// the sum restricted to p_j + p_k above the kernel cutoff.
double qfi(const HermitianMatrix& rho, const HermitianMatrix& drho);

}  // namespace menos
