#include "menos/models.hpp"

#include <cmath>
#include <numbers>

namespace menos {

namespace {

constexpr double kDegenerateQfiTol = 1e-12;

CMatrix pauli_y() {
  CMatrix s(2, 2);
  s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return s;
}

}  // namespace

ModelAtPoint::ModelAtPoint(double theta_in, HermitianMatrix rho_in,
                           HermitianMatrix drho_in,
                           std::optional<double> qfi_known_in)
    : theta(theta_in),
      rho(std::move(rho_in)),
      drho(std::move(drho_in)),
      qfi_known(qfi_known_in) {
  if (rho.dim() != drho.dim()) {
    throw DimensionMismatch("ModelAtPoint: rho and drho dimensions differ");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    throw InvalidArgument("ModelAtPoint: Tr(rho) != 1");
  }
  if (std::abs(drho.trace()) > 1e-9) {
    throw InvalidArgument("ModelAtPoint: drho is not traceless");
  }
  if (eig_hermitian(rho).eigenvalues.minCoeff() < -tol::psd) {
    throw NotPositiveSemidefinite("ModelAtPoint: rho is not PSD");
  }
}

AnalyticOutcomeModel::AnalyticOutcomeModel(std::vector<Outcome> probs_in,
                                           std::string description_in)
    : probs(std::move(probs_in)), description(std::move(description_in)) {
  if (probs.empty()) throw InvalidArgument("AnalyticOutcomeModel: no outcomes");
  double p_sum = 0.0;
  double dp_sum = 0.0;
  for (const auto& o : probs) {
    if (!std::isfinite(o.p) || !std::isfinite(o.dp) || o.p < 0.0) {
      throw InvalidArgument("AnalyticOutcomeModel: probabilities must be finite and >= 0");
    }
    p_sum += o.p;
    dp_sum += o.dp;
  }
  if (std::abs(p_sum - 1.0) > 1e-9 || std::abs(dp_sum) > 1e-9) {
    throw InvalidArgument("AnalyticOutcomeModel: probability sums violated");
  }
}

ModelAtPoint pure_canonicalize(const CVector& psi, const CVector& dpsi,
                               double theta) {
  if (psi.size() != dpsi.size()) {
    throw DimensionMismatch("pure_canonicalize: psi and dpsi dimensions differ");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw InvalidArgument("pure_canonicalize: psi is not normalized");
  }
  const Complex overlap = psi.dot(dpsi);  // ⟨ψ|ψ̇⟩
  if (std::abs(overlap.real()) > 1e-9) {
    throw InvalidArgument("pure_canonicalize: Re⟨ψ|ψ̇⟩ != 0 (norm not preserved)");
  }
  const double fq = 4.0 * (dpsi.squaredNorm() - std::norm(overlap));
  if (fq <= kDegenerateQfiTol) {
    throw DegenerateModel("pure_canonicalize: |ψ̇⟩ is parallel to |ψ⟩ (F_Q = 0)");
  }
  CMatrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;  // |+⟩⟨+|
  const CMatrix drho = 0.5 * std::sqrt(fq) * pauli_y();
  return ModelAtPoint(theta, HermitianMatrix(rho), HermitianMatrix(drho), fq);
}

AnalyticOutcomeModel interferometer_stats(double theta, double phi,
                                          double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw InvalidArgument("interferometer_stats: visibility must be in [0, 1]");
  }
  const double c = std::cos(theta + phi);
  const double s = std::sin(theta + phi);
  std::vector<AnalyticOutcomeModel::Outcome> probs(2);
  probs[0] = {0.5 * (1.0 + visibility * c), -0.5 * visibility * s};
  probs[1] = {0.5 * (1.0 - visibility * c), 0.5 * visibility * s};
  return AnalyticOutcomeModel(std::move(probs), "interferometer");
}

ModelAtPoint interferometer_model(double theta, double phi) {
  const double x = theta + phi;
  CVector psi(2);
  psi << Complex(1.0, 0.0) / std::numbers::sqrt2,
      Complex(std::cos(x), std::sin(x)) / std::numbers::sqrt2;
  CVector dpsi(2);
  dpsi << Complex(0.0, 0.0),
      Complex(0.0, 1.0) * psi[1];  // i e^{ix}/√2
  return pure_canonicalize(psi, dpsi, theta);
}

SuperresConstants superres_constants(double theta, double sigma) {
  if (!(theta > 0.0)) {
    throw InvalidArgument("superres_constants: theta must be > 0");
  }
  if (!(sigma > 0.0)) {
    throw InvalidArgument("superres_constants: sigma must be > 0");
  }
  const double s2 = sigma * sigma;
  const double t = theta * theta / (8.0 * s2);
  SuperresConstants k;
  k.sigma = sigma;
  k.theta = theta;
  k.delta = std::exp(-t);
  k.gamma = -theta * k.delta / (4.0 * s2);
  k.c3 = 0.25 * std::sqrt((8.0 * s2 * std::sinh(t) - theta * theta) /
                          (s2 * s2 * std::expm1(t)));
  k.c4 = 0.25 * std::sqrt((8.0 * s2 * std::sinh(t) + theta * theta) /
                          (s2 * s2 * (std::exp(t) + 1.0)));
  k.alpha = 0.5 * k.gamma;
  k.beta_s = -0.25 * k.c4 * std::sqrt(1.0 + k.delta);
  k.beta_a = -0.25 * k.c3 * std::sqrt(1.0 - k.delta);
  return k;
}

ModelAtPoint superres_model(double theta, double sigma) {
  const SuperresConstants k = superres_constants(theta, sigma);
  CMatrix rho = CMatrix::Zero(4, 4);
  rho(0, 0) = 0.5 * (1.0 + k.delta);
  rho(2, 2) = 0.5 * (1.0 - k.delta);
  CMatrix drho = CMatrix::Zero(4, 4);
  drho(0, 0) = k.alpha;
  drho(0, 1) = k.beta_s;
  drho(1, 0) = k.beta_s;
  drho(2, 2) = -k.alpha;
  drho(2, 3) = k.beta_a;
  drho(3, 2) = k.beta_a;
  const double fq = 1.0 / (4.0 * sigma * sigma);
  return ModelAtPoint(theta, HermitianMatrix(rho), HermitianMatrix(drho), fq);
}

AnalyticOutcomeModel hg_mode_stats(double theta, double sigma, int modes) {
  if (!(theta > 0.0)) throw InvalidArgument("hg_mode_stats: theta must be > 0");
  if (!(sigma > 0.0)) throw InvalidArgument("hg_mode_stats: sigma must be > 0");
  if (modes < 2) throw InvalidArgument("hg_mode_stats: at least 2 outcomes required");
  const double q = theta * theta / (16.0 * sigma * sigma);
  const double l_base = -theta / (8.0 * sigma * sigma);
  std::vector<AnalyticOutcomeModel::Outcome> probs(static_cast<std::size_t>(modes));
  double p_rest = 1.0;
  double dp_rest = 0.0;
  double term = std::exp(-q);  // q^i/i! · e^{−q}, starting at i = 0
  for (int i = 1; i < modes; ++i) {
    term *= q / static_cast<double>(i);
    const double l = l_base + 2.0 * static_cast<double>(i) / theta;
    probs[static_cast<std::size_t>(i - 1)] = {term, term * l};
    p_rest -= term;
    dp_rest -= term * l;
  }
  // Everything not resolved individually (mode 0 plus the tail) is one bucket.
  if (p_rest < -1e-12) {
    throw NumericalInconsistency("hg_mode_stats: bucket probability below 0");
  }
  probs[static_cast<std::size_t>(modes - 1)] = {std::max(p_rest, 0.0), dp_rest};
  return AnalyticOutcomeModel(std::move(probs), "hg-modes");
}

ModelAtPoint finite_diff_model(const std::function<HermitianMatrix(double)>& rho_at,
                               double theta, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite_diff_model: h must be > 0");
  const HermitianMatrix plus = rho_at(theta + h);
  const HermitianMatrix minus = rho_at(theta - h);
  const HermitianMatrix at = rho_at(theta);
  if (plus.dim() != minus.dim() || plus.dim() != at.dim()) {
    throw DimensionMismatch("finite_diff_model: callback dimension changed");
  }
  HermitianMatrix drho((plus.mat() - minus.mat()) / (2.0 * h));
  return ModelAtPoint(theta, at, std::move(drho));
}

double default_fd_step(double theta) {
  return 1e-5 * std::max(1.0, std::abs(theta));
}

}  // namespace menos
