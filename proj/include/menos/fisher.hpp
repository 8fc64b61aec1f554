#pragma once

#include <cstdint>
#include <vector>

#include "menos/models.hpp"
#include "menos/povm.hpp"

namespace menos {

/// Classical statistics of one measurement outcome.
///
/// An outcome with p ≤ p_tol and |dp| ≤ dp_tol carries no information: it is
/// flagged non-informative, gets l = 0 and is excluded from extreme-derivative
/// selection. An outcome with p ≤ p_tol but |dp| > dp_tol makes the Fisher
/// information diverge; its l is ±∞ and the whole record has cfi = +∞.
struct OutcomeRecord {
  double p = 0.0;
  double dp = 0.0;
  double l = 0.0;  // logarithmic derivative dp/p for informative outcomes
  bool informative = false;
};

struct OutcomeStats {
  std::vector<OutcomeRecord> outcomes;
  double cfi = 0.0;  // Σ_informative p·l², or +∞ on divergence
};

/// Worst-case noise analysis of a measurement: the susceptibility
/// χ = 1 + g_max/F_C with g_max = ½(l_min² + l_max² + ‖A_min − A_max‖₁),
/// together with the two-effective-outcome noise measurement attaining it.
struct MenosReport {
  double chi = 0.0;
  double l_min = 0.0;
  double l_max = 0.0;
  double g_max = 0.0;
  double cfi = 0.0;
  std::size_t min_index = 0;  // outcome label carrying l_min (and Ñ₁)
  std::size_t max_index = 0;  // outcome label carrying l_max (and 1−Ñ₁)
  HermitianMatrix a_min;
  HermitianMatrix a_max;
  Povm worst_noise;
};

/// Outcome probabilities p_i = Tr(ρ M_i) and derivatives ṗ_i = Tr(ρ̇ M_i).
OutcomeStats outcome_stats(const ModelAtPoint& model, const Povm& m);

/// Same statistics from a closed-form outcome model.
OutcomeStats stats_from_analytic(const AnalyticOutcomeModel& a);

/// Cramér-Rao bound 1/(N·F_C); +∞ for F_C = 0 and 0 for F_C = +∞.
double crb(double cfi, std::int64_t n);

/// A(l) = l²ρ − 2lρ̇: the operator whose overlap with a noise element at an
/// outcome with logarithmic derivative l gives that element's first-order
/// Fisher-information loss.
HermitianMatrix noise_response_operator(const ModelAtPoint& model, double l);

/// G[N] = Σ_i Tr(A_i N_i) with A_i built from the stats of the measured POVM.
double g_functional(const ModelAtPoint& model, const OutcomeStats& stats,
                    const Povm& noise);

/// Susceptibility against one specific noise measurement:
/// χ[M, N] = 1 + G[N]/F_C[M].
double chi_pair(const ModelAtPoint& model, const OutcomeStats& stats_m,
                const Povm& m, const Povm& noise);

/// ½(l_min² + l_max² + ‖A(l_min) − A(l_max)‖₁), the maximum of G over all
/// noise measurements supported on two outcomes with those derivatives.
double g_max_from_extremes(const ModelAtPoint& model, double l_min, double l_max);

/// Worst-case susceptibility χ[M] = max_N χ[M, N] in closed form. Requires a
/// finite positive Fisher information and at least two outcomes; if an
/// informative outcome has vanishing probability the susceptibility diverges
/// and the report carries chi = +∞.
MenosReport chi_menos(const ModelAtPoint& model, const OutcomeStats& stats);

/// Independent maximization of χ[M, N]: random noise POVMs plus the
/// structured two-outcome family built from spectral projectors of
/// A_i − A_j over all label pairs. Never exceeds chi_menos beyond rounding.
double chi_bruteforce(const ModelAtPoint& model, const OutcomeStats& stats,
                      const Povm& m, int trials, std::uint64_t seed);

}  // namespace menos
