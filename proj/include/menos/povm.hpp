#pragma once

#include <cstdint>
#include <vector>

#include "menos/hermitian.hpp"

namespace menos {

/// Ordered list of Hermitian measurement operators on a common space.
///
/// The type itself only enforces shape (K >= 1, equal dimensions); whether the
/// elements are PSD and sum to the identity is checked by validate(), so that
/// deliberately broken measurements can still be represented and reported on.
class Povm {
 public:
  explicit Povm(std::vector<HermitianMatrix> elements);

  Eigen::Index dim() const { return elements_[0].dim(); }
  std::size_t size() const { return elements_.size(); }
  const HermitianMatrix& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }

 private:
  std::vector<HermitianMatrix> elements_;
};

/// Per-element minimum eigenvalues and the completeness residual
/// ‖Σ_i M_i − 1‖_max.
struct ValidationReport {
  std::vector<double> min_eigenvalues;
  double completeness_residual = 0.0;
  bool passed = false;
};

/// Column-stochastic map t(j|i): entries nonnegative, Σ_j t(j|i) = 1 for
/// every input label i. Stored as an L×K matrix with t(j, i) = t(j|i).
class StochasticMap {
 public:
  explicit StochasticMap(Eigen::MatrixXd t);

  Eigen::Index inputs() const { return t_.cols(); }
  Eigen::Index outputs() const { return t_.rows(); }
  const Eigen::MatrixXd& t() const { return t_; }

 private:
  Eigen::MatrixXd t_;
};

ValidationReport validate(const Povm& m, double psd_tol = tol::psd,
                          double completeness_tol = tol::completeness);

/// Rank-one projective measurement onto the given orthonormal basis.
Povm projective_from_states(const std::vector<CVector>& states);

/// Qubit projective measurement implementing an interferometer with phase
/// offset phi: projectors onto (|0⟩ + e^{∓iφ'}|1⟩)/√2 with φ' ∈ {φ, φ−π},
/// i.e. the two detector ports of the balanced readout rotated by phi.
Povm equator_projective_povm(double phi);

/// Element-wise convex combination (1−eps)·M + eps·N. Outcome labels must
/// already be aligned: both measurements need the same dimension and the same
/// outcome count (use pad_with_zero_elements to align explicitly).
Povm mix(const Povm& m, const Povm& n, double eps);

/// Classical post-processing M'_j = Σ_i t(j|i) M_i.
Povm coarse_grain(const Povm& m, const StochasticMap& t);

/// Copy of m extended with zero operators up to target_outcomes elements.
Povm pad_with_zero_elements(const Povm& m, std::size_t target_outcomes);

/// Random K-outcome POVM: M_i = S^{−1/2} G_i S^{−1/2} from random PSD G_i
/// with S = Σ G_i. Deterministic in the seed.
Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed);

/// Random qubit POVM whose elements are λ_i |φ_i⟩⟨φ_i| with equator states
/// |φ_i⟩ = (|0⟩ + e^{iφ_i}|1⟩)/√2, built as a convex combination of
/// outcomes/2 projective equator pairs {P_φ, P_{φ+π}}. The constraints
/// Σ λ_i = 2 and Σ λ_i e^{iφ_i} = 0 hold by construction.
Povm random_equator_povm(std::size_t outcomes, std::uint64_t seed);

/// Equator state (|0⟩ + e^{iφ}|1⟩)/√2.
CVector equator_state(double phi);

}  // namespace menos
