#include "menos/qcrb.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace menos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

}  // namespace

SaturationReport check_saturation(const ModelAtPoint& model, const Povm& m,
                                  double tol) {
  if (model.rho.dim() != m.dim()) {
    throw DimensionMismatch("check_saturation: model and POVM dimensions differ");
  }
  SaturationReport report;
  report.qfi = model.qfi_known ? *model.qfi_known : qfi(model.rho, model.drho);

  const OutcomeStats stats = outcome_stats(model, m);
  report.cfi = stats.cfi;
  report.cfi_gap = report.qfi - stats.cfi;

  const HermitianMatrix lambda = sld(model.rho, model.drho);
  const EigenDecomposition ed = eig_hermitian(model.rho);
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < model.rho.dim(); ++j) {
    if (ed.eigenvalues[j] > tol::kernel) support.push_back(j);
  }

  std::vector<CMatrix> roots;
  roots.reserve(m.size());
  for (const auto& e : m.elements()) roots.push_back(psd_sqrt(e).mat());

  for (const auto& root : roots) {
    for (Eigen::Index j : support) {
      for (Eigen::Index k : support) {
        const CMatrix ket_bra =
            ed.eigenvectors.col(j) * ed.eigenvectors.col(k).adjoint();
        const CMatrix l_jk = ket_bra * lambda.mat() - lambda.mat() * ket_bra;
        const double residual = (root * l_jk * root).cwiseAbs().maxCoeff();
        report.max_condition1_residual =
            std::max(report.max_condition1_residual, residual);
      }
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (stats.outcomes[i].p > tol::p_outcome) continue;
    for (Eigen::Index j : support) {
      const CVector v = roots[i] * (lambda.mat() * ed.eigenvectors.col(j));
      report.max_condition2_residual =
          std::max(report.max_condition2_residual, v.cwiseAbs().maxCoeff());
    }
  }

  report.saturates = std::isfinite(stats.cfi) &&
                     report.max_condition1_residual <= tol &&
                     report.max_condition2_residual <= tol &&
                     report.cfi_gap <= tol * report.qfi;
  return report;
}

bool is_equator_povm(const Povm& m, double tol) {
  if (m.dim() != 2) throw InvalidArgument("is_equator_povm: qubit POVMs only");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (const auto& e : m.elements()) {
    const EigenDecomposition ed = eig_hermitian(e);
    const double lo = ed.eigenvalues[0];
    const double hi = ed.eigenvalues[1];
    if (hi <= tol) continue;  // zero element
    if (std::abs(lo) > tol) return false;  // not rank-one
    const CVector state = ed.eigenvectors.col(1);
    if (std::abs(std::abs(state[0]) - inv_sqrt2) > tol) return false;
    if (std::abs(std::abs(state[1]) - inv_sqrt2) > tol) return false;
  }
  return true;
}

Povm superres_family_povm(double phi_s, double phi_a) {
  std::vector<HermitianMatrix> elements;
  elements.reserve(4);
  for (int block = 0; block < 2; ++block) {
    const double phi = (block == 0) ? phi_s : phi_a;
    const Eigen::Index base = 2 * block;
    for (int half = 0; half < 2; ++half) {
      const double angle = phi + half * std::numbers::pi;
      CVector v = CVector::Zero(4);
      v[base] = std::cos(angle / 2.0);
      v[base + 1] = std::sin(angle / 2.0);
      elements.emplace_back(CMatrix(v * v.adjoint()));
    }
  }
  return Povm(std::move(elements));
}

ChiQResult minimize_chi_q_superres(double theta, double sigma, int grid_n,
                                   int refine_iters) {
  if (grid_n < 16) throw InvalidArgument("minimize_chi_q_superres: grid_n must be >= 16");
  if (refine_iters < 0) {
    throw InvalidArgument("minimize_chi_q_superres: refine_iters must be >= 0");
  }
  const ModelAtPoint model = superres_model(theta, sigma);
  const double fq = *model.qfi_known;

  ChiQResult best;
  best.chi_q = kInf;
  bool feasible_found = false;

  auto evaluate = [&](double phi_s, double phi_a) {
    ++best.evaluations;
    const Povm povm = superres_family_povm(phi_s, phi_a);
    const OutcomeStats stats = outcome_stats(model, povm);
    // Admissible points must saturate the QCRB; degenerate angles produce a
    // dead outcome and a Fisher-information deficit, so they fall out here.
    if (!std::isfinite(stats.cfi)) return;
    if (std::abs(stats.cfi - fq) > tol::saturation * fq) return;
    const double chi = chi_menos(model, stats).chi;
    const double ws = wrap_angle(phi_s);
    const double wa = wrap_angle(phi_a);
    const bool improves =
        chi < best.chi_q ||
        (chi == best.chi_q &&
         (ws < best.phi_s || (ws == best.phi_s && wa < best.phi_a)));
    if (improves) {
      best.chi_q = chi;
      best.phi_s = ws;
      best.phi_a = wa;
      best.cfi_at_optimum = stats.cfi;
      feasible_found = true;
    }
  };

  // Round 0 covers [0, 2π)²; each refinement re-grids a window shrunk by 4
  // around the incumbent.
  for (int k = 0; k < grid_n; ++k) {
    for (int l = 0; l < grid_n; ++l) {
      evaluate(kTwoPi * k / grid_n, kTwoPi * l / grid_n);
    }
  }
  if (!feasible_found) {
    throw NoFeasiblePoint("minimize_chi_q_superres: no admissible grid point");
  }
  double span = kTwoPi;
  for (int round = 0; round < refine_iters; ++round) {
    span /= 4.0;
    const double s0 = best.phi_s - span / 2.0;
    const double a0 = best.phi_a - span / 2.0;
    for (int k = 0; k < grid_n; ++k) {
      for (int l = 0; l < grid_n; ++l) {
        evaluate(s0 + span * k / (grid_n - 1), a0 + span * l / (grid_n - 1));
      }
    }
  }
  return best;
}

}  // namespace menos
