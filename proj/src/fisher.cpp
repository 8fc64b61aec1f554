#include "menos/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace menos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OutcomeStats finalize_stats(std::vector<OutcomeRecord> outcomes) {
  OutcomeStats stats;
  stats.cfi = 0.0;
  for (auto& o : outcomes) {
    if (o.p > tol::p_outcome) {
      o.informative = true;
      o.l = o.dp / o.p;
      stats.cfi += o.p * o.l * o.l;
    } else if (std::abs(o.dp) <= tol::dp_outcome) {
      o.informative = false;
      o.l = 0.0;
    } else {
      // Vanishing probability with a non-vanishing derivative: the outcome's
      // contribution p·l² diverges.
      o.informative = true;
      o.l = std::copysign(kInf, o.dp);
      stats.cfi = kInf;
    }
  }
  stats.outcomes = std::move(outcomes);
  return stats;
}

void check_stats_sums(const std::vector<OutcomeRecord>& outcomes) {
  double p_sum = 0.0;
  double dp_sum = 0.0;
  for (const auto& o : outcomes) {
    p_sum += o.p;
    dp_sum += o.dp;
  }
  if (std::abs(p_sum - 1.0) > 1e-9 || std::abs(dp_sum) > 1e-9) {
    throw InvalidInput("outcome statistics do not sum to a distribution");
  }
}

// Indices of the informative outcomes with minimal and maximal l,
// first occurrence on ties.
std::pair<std::size_t, std::size_t> extreme_labels(const OutcomeStats& stats) {
  std::size_t imin = stats.outcomes.size();
  std::size_t imax = stats.outcomes.size();
  for (std::size_t i = 0; i < stats.outcomes.size(); ++i) {
    const auto& o = stats.outcomes[i];
    if (!o.informative) continue;
    if (imin == stats.outcomes.size() || o.l < stats.outcomes[imin].l) imin = i;
    if (imax == stats.outcomes.size() || o.l > stats.outcomes[imax].l) imax = i;
  }
  return {imin, imax};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

OutcomeStats outcome_stats(const ModelAtPoint& model, const Povm& m) {
  if (model.rho.dim() != m.dim()) {
    throw DimensionMismatch("outcome_stats: model and POVM dimensions differ");
  }
  std::vector<OutcomeRecord> outcomes(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    outcomes[i].p = (model.rho.mat() * m[i].mat()).trace().real();
    outcomes[i].dp = (model.drho.mat() * m[i].mat()).trace().real();
  }
  check_stats_sums(outcomes);
  return finalize_stats(std::move(outcomes));
}

OutcomeStats stats_from_analytic(const AnalyticOutcomeModel& a) {
  std::vector<OutcomeRecord> outcomes(a.probs.size());
  for (std::size_t i = 0; i < a.probs.size(); ++i) {
    outcomes[i].p = a.probs[i].p;
    outcomes[i].dp = a.probs[i].dp;
  }
  return finalize_stats(std::move(outcomes));
}

double crb(double cfi, std::int64_t n) {
  if (n < 1) throw InvalidArgument("crb: N must be positive");
  if (cfi < 0.0) throw InvalidArgument("crb: negative Fisher information");
  if (cfi == 0.0) return kInf;
  if (std::isinf(cfi)) return 0.0;
  return 1.0 / (static_cast<double>(n) * cfi);
}

HermitianMatrix noise_response_operator(const ModelAtPoint& model, double l) {
  return HermitianMatrix(l * l * model.rho.mat() - 2.0 * l * model.drho.mat());
}

double g_functional(const ModelAtPoint& model, const OutcomeStats& stats,
                    const Povm& noise) {
  if (noise.size() != stats.outcomes.size()) {
    throw DimensionMismatch("g_functional: outcome counts differ");
  }
  if (noise.dim() != model.rho.dim()) {
    throw DimensionMismatch("g_functional: dimensions differ");
  }
  if (!std::isfinite(stats.cfi)) {
    throw UndefinedSusceptibility("g_functional: divergent Fisher information");
  }
  double g = 0.0;
  for (std::size_t i = 0; i < noise.size(); ++i) {
    const double l = stats.outcomes[i].l;
    if (l == 0.0) continue;  // A_i = 0
    g += (noise_response_operator(model, l).mat() * noise[i].mat()).trace().real();
  }
  return g;
}

double chi_pair(const ModelAtPoint& model, const OutcomeStats& stats_m,
                const Povm& m, const Povm& noise) {
  if (m.size() != noise.size() || m.dim() != noise.dim()) {
    throw DimensionMismatch("chi_pair: measurement and noise shapes differ");
  }
  if (!std::isfinite(stats_m.cfi) || stats_m.cfi <= 0.0) {
    throw UndefinedSusceptibility("chi_pair: Fisher information must be finite and positive");
  }
  return 1.0 + g_functional(model, stats_m, noise) / stats_m.cfi;
}

double g_max_from_extremes(const ModelAtPoint& model, double l_min, double l_max) {
  const HermitianMatrix diff =
      noise_response_operator(model, l_min) - noise_response_operator(model, l_max);
  return 0.5 * (l_min * l_min + l_max * l_max + trace_norm(diff));
}

MenosReport chi_menos(const ModelAtPoint& model, const OutcomeStats& stats) {
  if (stats.outcomes.size() < 2) {
    throw UndefinedSusceptibility("chi_menos: at least two outcomes required");
  }
  if (stats.cfi <= 0.0) {
    throw UndefinedSusceptibility("chi_menos: zero Fisher information");
  }
  const Eigen::Index dim = model.rho.dim();
  const auto [imin, imax] = extreme_labels(stats);
  if (imin >= stats.outcomes.size()) {
    throw UndefinedSusceptibility("chi_menos: no informative outcome");
  }

  if (!std::isfinite(stats.cfi)) {
    // An informative outcome with vanishing probability: χ diverges. Report
    // the divergent extremes with inert placeholders for the operators.
    MenosReport report{kInf,
                       stats.outcomes[imin].l,
                       stats.outcomes[imax].l,
                       kInf,
                       kInf,
                       imin,
                       imax,
                       HermitianMatrix::zero(dim),
                       HermitianMatrix::zero(dim),
                       Povm(std::vector<HermitianMatrix>{
                           HermitianMatrix::identity(dim)})};
    return report;
  }

  const double l_min = stats.outcomes[imin].l;
  const double l_max = stats.outcomes[imax].l;
  HermitianMatrix a_min = noise_response_operator(model, l_min);
  HermitianMatrix a_max = noise_response_operator(model, l_max);

  std::vector<HermitianMatrix> noise_elements(stats.outcomes.size(),
                                              HermitianMatrix::zero(dim));
  double g_max = 0.0;
  if (imin == imax) {
    // Single informative outcome: all noise weight lands on its label.
    noise_elements[imin] = HermitianMatrix::identity(dim);
    g_max = l_max * l_max;
  } else {
    // Ñ₁ projects on the nonnegative eigenspace of A_min − A_max; the noise
    // acts only on the two extreme-derivative labels.
    const EigenDecomposition ed = eig_hermitian(a_min - a_max);
    CMatrix projector = CMatrix::Zero(dim, dim);
    double positive_part = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (ed.eigenvalues[k] >= 0.0) {
        projector += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
        positive_part += ed.eigenvalues[k];
      }
    }
    HermitianMatrix n1(projector);
    noise_elements[imax] = HermitianMatrix(CMatrix::Identity(dim, dim) - n1.mat());
    noise_elements[imin] = std::move(n1);
    g_max = l_max * l_max + positive_part;
  }

  MenosReport report{1.0 + g_max / stats.cfi,
                     l_min,
                     l_max,
                     g_max,
                     stats.cfi,
                     imin,
                     imax,
                     std::move(a_min),
                     std::move(a_max),
                     Povm(std::move(noise_elements))};
  return report;
}

double chi_bruteforce(const ModelAtPoint& model, const OutcomeStats& stats,
                      const Povm& m, int trials, std::uint64_t seed) {
  if (stats.outcomes.size() < 2) {
    throw UndefinedSusceptibility("chi_bruteforce: at least two outcomes required");
  }
  if (!std::isfinite(stats.cfi) || stats.cfi <= 0.0) {
    throw UndefinedSusceptibility("chi_bruteforce: Fisher information must be finite and positive");
  }
  const std::size_t k = m.size();
  const Eigen::Index dim = m.dim();
  double best = -kInf;

  // (a) unstructured random noise POVMs
  for (int t = 0; t < trials; ++t) {
    const Povm noise = random_povm(dim, k, mix_seed(seed, static_cast<std::uint64_t>(t)));
    best = std::max(best, chi_pair(model, stats, m, noise));
  }

  // (b) all single-label and two-label placements, the latter with Ñ₁ the
  // positive spectral projector of A_i − A_j
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<HermitianMatrix> single(k, HermitianMatrix::zero(dim));
    single[i] = HermitianMatrix::identity(dim);
    best = std::max(best, chi_pair(model, stats, m, Povm(std::move(single))));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const HermitianMatrix diff = noise_response_operator(model, stats.outcomes[i].l) -
                                   noise_response_operator(model, stats.outcomes[j].l);
      const EigenDecomposition ed = eig_hermitian(diff);
      CMatrix projector = CMatrix::Zero(dim, dim);
      for (Eigen::Index c = 0; c < dim; ++c) {
        if (ed.eigenvalues[c] >= 0.0) {
          projector += ed.eigenvectors.col(c) * ed.eigenvectors.col(c).adjoint();
        }
      }
      std::vector<HermitianMatrix> pair(k, HermitianMatrix::zero(dim));
      HermitianMatrix n1(projector);
      pair[j] = HermitianMatrix(CMatrix::Identity(dim, dim) - n1.mat());
      pair[i] = std::move(n1);
      best = std::max(best, chi_pair(model, stats, m, Povm(std::move(pair))));
    }
  }
  return best;
}

}  // namespace menos
