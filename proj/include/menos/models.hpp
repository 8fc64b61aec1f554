#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "menos/hermitian.hpp"

namespace menos {

/// A parametric state family frozen at one parameter value: the state ρ_θ,
/// its derivative ρ̇_θ and, when known analytically, the quantum Fisher
/// information.
struct ModelAtPoint {
  double theta;
  HermitianMatrix rho;
  HermitianMatrix drho;
  std::optional<double> qfi_known;

  ModelAtPoint(double theta, HermitianMatrix rho, HermitianMatrix drho,
               std::optional<double> qfi_known = std::nullopt);
};

/// Constants of the two-source Gaussian-PSF separation model at (θ, σ).
struct SuperresConstants {
  double sigma = 0.0;
  double theta = 0.0;
  double delta = 0.0;   // overlap of the two displaced PSFs, e^{−θ²/8σ²}
  double gamma = 0.0;   // d(delta)/dθ = −θ e^{−θ²/8σ²}/4σ²
  double c3 = 0.0;
  double c4 = 0.0;
  double alpha = 0.0;   // γ/2
  double beta_s = 0.0;  // −(c₄/4)√(1+δ)
  double beta_a = 0.0;  // −(c₃/4)√(1−δ)
};

/// Outcome probabilities and their θ-derivatives given in closed form,
/// bypassing any operator representation.
struct AnalyticOutcomeModel {
  struct Outcome {
    double p = 0.0;
    double dp = 0.0;
  };

  std::vector<Outcome> probs;
  std::string description;

  AnalyticOutcomeModel(std::vector<Outcome> probs, std::string description);
};

/// Reduces a pure-state family |ψ_θ⟩ at a point to its canonical 2×2 form
/// ρ = |+⟩⟨+|, ρ̇ = ½√F_Q σ_y on span{|ψ⟩, |ψ̇⟩}, with
/// F_Q = 4(⟨ψ̇|ψ̇⟩ − |⟨ψ̇|ψ⟩|²). The ambient dimension of psi is arbitrary.
ModelAtPoint pure_canonicalize(const CVector& psi, const CVector& dpsi,
                               double theta = 0.0);

/// Two-port interferometer statistics p_± = ½[1 ± v cos(θ+φ)],
/// ṗ_± = ∓½ v sin(θ+φ) at visibility v ∈ [0, 1].
AnalyticOutcomeModel interferometer_stats(double theta, double phi,
                                          double visibility);

/// Canonical model of the single-photon interferometer state
/// (|0⟩ + e^{i(θ+φ)}|1⟩)/√2; the quantum Fisher information is 1.
ModelAtPoint interferometer_model(double theta, double phi);

SuperresConstants superres_constants(double theta, double sigma);

/// 4×4 two-source separation model in the fixed basis order
/// (|0⟩_s, |1⟩_s, |0⟩_a, |1⟩_a); the quantum Fisher information is 1/(4σ²)
/// independently of θ.
ModelAtPoint superres_model(double theta, double sigma);

/// Hermite-Gaussian demultiplexing statistics: modes 1..K−1 are resolved
/// individually, everything else (including mode 0) lands in outcome K.
AnalyticOutcomeModel hg_mode_stats(double theta, double sigma, int modes);

/// Central-difference model for a user-supplied family θ ↦ ρ_θ expressed in
/// a θ-independent basis.
ModelAtPoint finite_diff_model(const std::function<HermitianMatrix(double)>& rho_at,
                               double theta, double h);

/// Step used by callers that do not pick one: 1e-5·max(1, |θ|).
double default_fd_step(double theta);

}  // namespace menos
