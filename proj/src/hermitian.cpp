#include "menos/hermitian.hpp"

#include <cmath>

namespace menos {

namespace {

// Shared preflight for sld/qfi: same dim, ρ PSD with unit trace, ρ̇ traceless.
void check_model_pair(const HermitianMatrix& rho, const HermitianMatrix& drho) {
  if (rho.dim() != drho.dim()) {
    throw DimensionMismatch("sld/qfi: rho and drho dimensions differ");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    throw InvalidArgument("sld/qfi: Tr(rho) != 1");
  }
  if (std::abs(drho.trace()) > 1e-9) {
    throw InvalidArgument("sld/qfi: drho is not traceless");
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(CMatrix m, double hermiticity_tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidInput("HermitianMatrix: matrix must be square with dim >= 1");
  }
  if (!m.allFinite()) {
    throw InvalidInput("HermitianMatrix: non-finite entries");
  }
  const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (drift > hermiticity_tol) {
    throw InvalidInput("HermitianMatrix: input exceeds Hermiticity tolerance");
  }
  mat_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(CMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("HermitianMatrix: dimension mismatch in +");
  return HermitianMatrix(a.mat() + b.mat());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("HermitianMatrix: dimension mismatch in -");
  return HermitianMatrix(a.mat() - b.mat());
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  if (!std::isfinite(s)) throw InvalidInput("HermitianMatrix: non-finite scalar");
  return HermitianMatrix(s * a.mat());
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.mat());
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("eig_hermitian: eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const HermitianMatrix& h) {
  return eig_hermitian(h).eigenvalues.cwiseAbs().sum();
}

HermitianMatrix psd_sqrt(const HermitianMatrix& p, double psd_tol) {
  EigenDecomposition ed = eig_hermitian(p);
  if (ed.eigenvalues.minCoeff() < -psd_tol) {
    throw NotPositiveSemidefinite("psd_sqrt: eigenvalue below -psd_tol");
  }
  const RVector roots = ed.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return HermitianMatrix(ed.eigenvectors * roots.asDiagonal() *
                         ed.eigenvectors.adjoint());
}

HermitianMatrix sld(const HermitianMatrix& rho, const HermitianMatrix& drho) {
  check_model_pair(rho, drho);
  EigenDecomposition ed = eig_hermitian(rho);
  if (ed.eigenvalues.minCoeff() < -tol::psd) {
    throw NotPositiveSemidefinite("sld: rho is not PSD");
  }
  const Eigen::Index n = rho.dim();
  const CMatrix r = ed.eigenvectors.adjoint() * drho.mat() * ed.eigenvectors;
  CMatrix lam = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double pj = ed.eigenvalues[j];
      const double pk = ed.eigenvalues[k];
      if (pj + pk > tol::kernel) {
        lam(j, k) = 2.0 * r(j, k) / (pj + pk);
      } else if (pj <= tol::kernel && pk <= tol::kernel &&
                 std::abs(r(j, k)) > 1e-8) {
        throw SupportViolation("sld: drho has weight on the kernel of rho");
      }
    }
  }
  return HermitianMatrix(ed.eigenvectors * lam * ed.eigenvectors.adjoint());
}

double qfi(const HermitianMatrix& rho, const HermitianMatrix& drho) {
  check_model_pair(rho, drho);
  EigenDecomposition ed = eig_hermitian(rho);
  if (ed.eigenvalues.minCoeff() < -tol::psd) {
    throw NotPositiveSemidefinite("qfi: rho is not PSD");
  }
  const Eigen::Index n = rho.dim();
  const CMatrix r = ed.eigenvectors.adjoint() * drho.mat() * ed.eigenvectors;
  double f = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double s = ed.eigenvalues[j] + ed.eigenvalues[k];
      if (s > tol::kernel) {
        f += 2.0 * std::norm(r(j, k)) / s;
      } else if (ed.eigenvalues[j] <= tol::kernel &&
                 ed.eigenvalues[k] <= tol::kernel &&
                 std::abs(r(j, k)) > 1e-8) {
        throw SupportViolation("qfi: drho has weight on the kernel of rho");
      }
    }
  }
  return f;
}

}  // namespace menos
