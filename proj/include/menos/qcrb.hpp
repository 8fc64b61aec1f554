#pragma once

#include "menos/fisher.hpp"

namespace menos {

/// Result of the exact saturation test: residuals of the two operator
/// conditions plus the Fisher-information gap F_Q − F_C.
struct SaturationReport {
  bool saturates = false;
  double max_condition1_residual = 0.0;  // worst ‖M_i^{1/2} L_jk M_i^{1/2}‖_max
  double max_condition2_residual = 0.0;  // worst ‖M_i^{1/2} Λ |ψ_j⟩‖_max, p_i = 0
  double cfi_gap = 0.0;
  double cfi = 0.0;
  double qfi = 0.0;
};

/// Outcome of the susceptibility minimization over the QCRB-saturating
/// four-projector family of the two-source separation model.
struct ChiQResult {
  double phi_s = 0.0;  // in [0, 2π)
  double phi_a = 0.0;  // in [0, 2π)
  double chi_q = 0.0;
  double cfi_at_optimum = 0.0;
  std::int64_t evaluations = 0;
};

/// Exact QCRB-saturation test: M saturates iff M_i^{1/2} L_jk M_i^{1/2} = 0
/// for all outcomes i and support labels j, k, and additionally
/// M_i^{1/2} Λ |ψ_j⟩ = 0 for every outcome with Tr(M_i ρ) = 0. Both residuals
/// are reported; the verdict also requires F_Q − F_C ≤ tol·F_Q.
SaturationReport check_saturation(const ModelAtPoint& model, const Povm& m,
                                  double tol = tol::saturation);

/// True iff every nonzero element of the qubit POVM is (within tol) a scaled
/// rank-one projector onto a state with |⟨0|φ⟩| = |⟨1|φ⟩| = 1/√2.
bool is_equator_povm(const Povm& m, double tol = 1e-9);

/// Four rank-one projectors {P_φs, P_φs+π, P_φa, P_φa+π}, the s-pair acting
/// on span(|0⟩_s, |1⟩_s) and the a-pair on span(|0⟩_a, |1⟩_a) in the basis
/// order of superres_model; P_φ projects on cos(φ/2)|0⟩ + sin(φ/2)|1⟩.
Povm superres_family_povm(double phi_s, double phi_a);

/// Deterministic refined grid search for min χ over the family above,
/// restricted to evaluations that saturate the QCRB within tolerance.
/// Each refinement round shrinks the search window by a factor of 4 around
/// the incumbent; ties prefer lexicographically smaller (φs, φa).
ChiQResult minimize_chi_q_superres(double theta, double sigma, int grid_n,
                                   int refine_iters);

}  // namespace menos
