#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "menos/hermitian.hpp"
#include "test_util.hpp"

using namespace menos;
using testutil::max_abs_diff;

namespace {

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix plus_projector() {
  CMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

// Residual of the defining equation (ρΛ + Λρ)/2 = ρ̇ projected onto the
// support of ρ; the independent check that a claimed SLD is correct.
double sld_residual_on_support(const HermitianMatrix& rho,
                               const HermitianMatrix& drho,
                               const HermitianMatrix& lambda) {
  const EigenDecomposition ed = eig_hermitian(rho);
  CMatrix kernel = CMatrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index k = 0; k < rho.dim(); ++k) {
    if (ed.eigenvalues[k] <= tol::kernel) {
      kernel += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
    }
  }
  const CMatrix residual =
      0.5 * (rho.mat() * lambda.mat() + lambda.mat() * rho.mat()) - drho.mat();
  // drop the kernel-kernel block, where Λ = 0 is pure convention
  const CMatrix coupled = residual - kernel * residual * kernel;
  return coupled.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("hermitian") {
  TEST_CASE("construction symmetrizes and validates") {
    CMatrix m(2, 2);
    m << 1.0, Complex(0.5, 1e-12), Complex(0.5, 1e-12), 2.0;
    // slightly non-Hermitian off-diagonal, inside tolerance
    const HermitianMatrix h(m);
    CHECK(max_abs_diff(h.mat(), h.mat().adjoint()) == 0.0);

    CMatrix bad(2, 2);
    bad << 1.0, 0.5, -0.5, 2.0;
    CHECK_THROWS_AS(HermitianMatrix{bad}, InvalidInput);

    CMatrix nan_mat = CMatrix::Zero(2, 2);
    nan_mat(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(HermitianMatrix{nan_mat}, InvalidInput);

    CHECK_THROWS_AS(HermitianMatrix{CMatrix::Zero(0, 0)}, InvalidInput);
  }

  TEST_CASE("eig of diagonal and real symmetric 2x2") {
    const auto ed1 = eig_hermitian(HermitianMatrix(diag2(3, -1)));
    CHECK(ed1.eigenvalues[0] == doctest::Approx(-1).epsilon(1e-14));
    CHECK(ed1.eigenvalues[1] == doctest::Approx(3).epsilon(1e-14));

    const auto ed2 = eig_hermitian(HermitianMatrix(2.0 * pauli_x()));
    CHECK(ed2.eigenvalues[0] == doctest::Approx(-2).epsilon(1e-14));
    CHECK(ed2.eigenvalues[1] == doctest::Approx(2).epsilon(1e-14));
  }

  TEST_CASE("eig reconstruction and orthonormality on random 6x6") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
      const HermitianMatrix h = testutil::random_hermitian(6, rng);
      const auto ed = eig_hermitian(h);
      CMatrix rebuilt = CMatrix::Zero(6, 6);
      for (Eigen::Index k = 0; k < 6; ++k) {
        rebuilt += ed.eigenvalues[k] * ed.eigenvectors.col(k) *
                   ed.eigenvectors.col(k).adjoint();
      }
      CHECK(max_abs_diff(rebuilt, h.mat()) <= 1e-9 * std::max(1.0, h.max_abs()));
      CHECK(max_abs_diff(ed.eigenvectors.adjoint() * ed.eigenvectors,
                         CMatrix::Identity(6, 6)) <= 1e-10);
      for (Eigen::Index k = 0; k + 1 < 6; ++k) {
        CHECK(ed.eigenvalues[k] <= ed.eigenvalues[k + 1]);
      }
      // eigenpair residual ‖Hv − λv‖ ≤ 1e-9 ‖H‖
      for (Eigen::Index k = 0; k < 6; ++k) {
        const double res =
            (h.mat() * ed.eigenvectors.col(k) - ed.eigenvalues[k] * ed.eigenvectors.col(k))
                .norm();
        CHECK(res <= 1e-9 * std::max(1.0, h.mat().norm()));
      }
    }
  }

  TEST_CASE("eig is deterministic on identical input") {
    std::mt19937_64 rng(7);
    const HermitianMatrix h = testutil::random_hermitian(5, rng);
    const auto a = eig_hermitian(h);
    const auto b = eig_hermitian(h);
    CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
    CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("trace norm") {
    CHECK(trace_norm(HermitianMatrix(diag2(3, -1))) == doctest::Approx(4).epsilon(1e-14));
    CHECK(trace_norm(HermitianMatrix::identity(4)) == doctest::Approx(4).epsilon(1e-14));
    CHECK(trace_norm(HermitianMatrix(2.0 * pauli_y())) == doctest::Approx(4).epsilon(1e-14));
  }

  TEST_CASE("trace norm dominates |trace| with equality iff sign-definite") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::Index dim = 2 + trial % 4;
      const HermitianMatrix h = (trial % 3 == 0) ? testutil::random_psd(dim, rng)
                                                 : testutil::random_hermitian(dim, rng);
      const double tn = trace_norm(h);
      const double tr = h.trace();
      CHECK(tn >= std::abs(tr) - 1e-12);
      const RVector ev = eig_hermitian(h).eigenvalues;
      const bool definite = ev.minCoeff() >= -1e-12 || ev.maxCoeff() <= 1e-12;
      if (definite) {
        CHECK(tn == doctest::Approx(std::abs(tr)).epsilon(1e-12));
      } else {
        CHECK(tn > std::abs(tr));
      }
    }
  }

  TEST_CASE("psd_sqrt on closed-form inputs") {
    const HermitianMatrix root = psd_sqrt(HermitianMatrix(diag2(4, 9)));
    CHECK(max_abs_diff(root.mat(), diag2(2, 3)) <= 1e-12);

    const HermitianMatrix proj(plus_projector());
    CHECK(max_abs_diff(psd_sqrt(proj).mat(), proj.mat()) <= 1e-12);

    CHECK_THROWS_AS(psd_sqrt(HermitianMatrix(diag2(1, -1))), NotPositiveSemidefinite);
  }

  TEST_CASE("psd_sqrt squares back to the input") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
      const HermitianMatrix p = testutil::random_psd(2 + trial % 5, rng);
      const HermitianMatrix s = psd_sqrt(p);
      CHECK(eig_hermitian(s).eigenvalues.minCoeff() >= -1e-12);
      CHECK(max_abs_diff(s.mat() * s.mat(), p.mat()) <= 1e-8 * std::max(1.0, p.max_abs()));
    }
  }

  TEST_CASE("sld closed forms") {
    const HermitianMatrix lam1 =
        sld(HermitianMatrix(0.5 * CMatrix::Identity(2, 2)), HermitianMatrix(0.5 * pauli_x()));
    CHECK(max_abs_diff(lam1.mat(), pauli_x()) <= 1e-12);

    const double beta = 0.37;
    const HermitianMatrix lam2 =
        sld(HermitianMatrix(diag2(1, 0)), HermitianMatrix(beta * pauli_x()));
    CHECK(max_abs_diff(lam2.mat(), 2.0 * beta * pauli_x()) <= 1e-12);

    const HermitianMatrix rho(plus_projector());
    const HermitianMatrix drho(0.5 * pauli_y());
    const HermitianMatrix lam3 = sld(rho, drho);
    CHECK(max_abs_diff(lam3.mat(), pauli_y()) <= 1e-12);
    CHECK(sld_residual_on_support(rho, drho, lam3) <= 1e-8);
  }

  TEST_CASE("sld rejects derivatives leaving the support") {
    CHECK_THROWS_AS(sld(HermitianMatrix(diag2(1, 0)), HermitianMatrix(0.1 * pauli_z())),
                    SupportViolation);
  }

  TEST_CASE("qfi closed forms") {
    CHECK(qfi(HermitianMatrix(plus_projector()), HermitianMatrix(0.5 * pauli_y())) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qfi(HermitianMatrix(plus_projector()), HermitianMatrix::zero(2)) == 0.0);
  }

  TEST_CASE("qfi agrees with Tr(rho Lambda^2) on random models") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::Index dim = 2 + trial % 3;
      HermitianMatrix rho = testutil::random_density(dim, rng);
      HermitianMatrix h = testutil::random_hermitian(dim, rng);
      if (trial % 4 == 0) {
        // rank-deficient state: project out the smallest eigenvector and
        // restrict the derivative to the support
        const auto ed = eig_hermitian(rho);
        CMatrix support = CMatrix::Zero(dim, dim);
        CMatrix truncated = CMatrix::Zero(dim, dim);
        for (Eigen::Index k = 1; k < dim; ++k) {
          const CMatrix proj = ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
          support += proj;
          truncated += ed.eigenvalues[k] * proj;
        }
        rho = HermitianMatrix(truncated / truncated.trace().real());
        h = HermitianMatrix(support * h.mat() * support);
      }
      const HermitianMatrix drho(h.mat() - h.trace() * rho.mat());
      const double f = qfi(rho, drho);
      CHECK(f >= 0.0);
      const HermitianMatrix lam = sld(rho, drho);
      const double via_sld = (rho.mat() * lam.mat() * lam.mat()).trace().real();
      CHECK(f == doctest::Approx(via_sld).epsilon(1e-9));
    }
  }
}
