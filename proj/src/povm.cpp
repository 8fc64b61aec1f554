#include "menos/povm.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace menos {

namespace {

CMatrix random_complex_gaussian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix x(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      x(i, j) = Complex(re, im) / std::numbers::sqrt2;
    }
  }
  return x;
}

}  // namespace

Povm::Povm(std::vector<HermitianMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw InvalidArgument("Povm: at least one element required");
  }
  const Eigen::Index d = elements_[0].dim();
  for (const auto& e : elements_) {
    if (e.dim() != d) throw DimensionMismatch("Povm: elements of unequal dimension");
  }
}

StochasticMap::StochasticMap(Eigen::MatrixXd t) : t_(std::move(t)) {
  if (t_.rows() < 1 || t_.cols() < 1) {
    throw InvalidArgument("StochasticMap: empty matrix");
  }
  if (!t_.allFinite() || (t_.array() < 0.0).any()) {
    throw InvalidArgument("StochasticMap: entries must be finite and nonnegative");
  }
  for (Eigen::Index i = 0; i < t_.cols(); ++i) {
    if (std::abs(t_.col(i).sum() - 1.0) > 1e-12) {
      throw InvalidArgument("StochasticMap: column does not sum to 1");
    }
  }
}

ValidationReport validate(const Povm& m, double psd_tol, double completeness_tol) {
  ValidationReport report;
  report.min_eigenvalues.reserve(m.size());
  bool psd_ok = true;
  CMatrix sum = CMatrix::Zero(m.dim(), m.dim());
  for (const auto& e : m.elements()) {
    const double min_eig = eig_hermitian(e).eigenvalues.minCoeff();
    report.min_eigenvalues.push_back(min_eig);
    psd_ok = psd_ok && min_eig >= -psd_tol;
    sum += e.mat();
  }
  report.completeness_residual =
      (sum - CMatrix::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff();
  report.passed = psd_ok && report.completeness_residual <= completeness_tol;
  return report;
}

Povm projective_from_states(const std::vector<CVector>& states) {
  if (states.empty()) throw InvalidBasis("projective_from_states: no states");
  const Eigen::Index d = states[0].size();
  if (static_cast<Eigen::Index>(states.size()) != d) {
    throw InvalidBasis("projective_from_states: state count must equal dimension");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != d) {
      throw InvalidBasis("projective_from_states: states of unequal dimension");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex overlap = states[j].dot(states[i]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(overlap - target) > 1e-10) {
        throw InvalidBasis("projective_from_states: states are not orthonormal");
      }
    }
  }
  std::vector<HermitianMatrix> elements;
  elements.reserve(states.size());
  for (const auto& s : states) {
    elements.emplace_back(CMatrix(s * s.adjoint()));
  }
  return Povm(std::move(elements));
}

CVector equator_state(double phi) {
  CVector v(2);
  v << Complex(1.0, 0.0) / std::numbers::sqrt2,
      Complex(std::cos(phi), std::sin(phi)) / std::numbers::sqrt2;
  return v;
}

Povm equator_projective_povm(double phi) {
  return projective_from_states({equator_state(-phi), equator_state(std::numbers::pi - phi)});
}

Povm mix(const Povm& m, const Povm& n, double eps) {
  if (m.dim() != n.dim()) throw DimensionMismatch("mix: dimension mismatch");
  if (m.size() != n.size()) {
    throw DimensionMismatch("mix: outcome counts differ; align labels first");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidArgument("mix: eps must be in [0, 1]");
  std::vector<HermitianMatrix> elements;
  elements.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    elements.emplace_back((1.0 - eps) * m[i].mat() + eps * n[i].mat());
  }
  return Povm(std::move(elements));
}

Povm coarse_grain(const Povm& m, const StochasticMap& t) {
  if (t.inputs() != static_cast<Eigen::Index>(m.size())) {
    throw DimensionMismatch("coarse_grain: map input count != outcome count");
  }
  std::vector<HermitianMatrix> elements;
  elements.reserve(t.outputs());
  for (Eigen::Index j = 0; j < t.outputs(); ++j) {
    CMatrix acc = CMatrix::Zero(m.dim(), m.dim());
    for (Eigen::Index i = 0; i < t.inputs(); ++i) {
      acc += t.t()(j, i) * m[static_cast<std::size_t>(i)].mat();
    }
    elements.emplace_back(std::move(acc));
  }
  return Povm(std::move(elements));
}

Povm pad_with_zero_elements(const Povm& m, std::size_t target_outcomes) {
  if (target_outcomes < m.size()) {
    throw InvalidArgument("pad_with_zero_elements: target below current outcome count");
  }
  std::vector<HermitianMatrix> elements = m.elements();
  while (elements.size() < target_outcomes) {
    elements.push_back(HermitianMatrix::zero(m.dim()));
  }
  return Povm(std::move(elements));
}

Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed) {
  if (dim < 1) throw InvalidArgument("random_povm: dim must be >= 1");
  if (outcomes < 2) throw InvalidArgument("random_povm: at least 2 outcomes required");
  std::mt19937_64 rng(seed);
  std::vector<CMatrix> gs;
  gs.reserve(outcomes);
  CMatrix total = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes; ++i) {
    const CMatrix x = random_complex_gaussian(dim, rng);
    gs.push_back(x * x.adjoint());
    total += gs.back();
  }
  // total is PD almost surely; whiten so the elements sum to the identity.
  EigenDecomposition ed = eig_hermitian(HermitianMatrix(total));
  const RVector inv_roots = ed.eigenvalues.cwiseSqrt().cwiseInverse();
  const CMatrix whitener =
      ed.eigenvectors * inv_roots.asDiagonal() * ed.eigenvectors.adjoint();
  std::vector<HermitianMatrix> elements;
  elements.reserve(outcomes);
  for (const auto& g : gs) {
    elements.emplace_back(CMatrix(whitener * g * whitener));
  }
  return Povm(std::move(elements));
}

Povm random_equator_povm(std::size_t outcomes, std::uint64_t seed) {
  if (outcomes < 2 || outcomes % 2 != 0) {
    throw InvalidArgument("random_equator_povm: outcome count must be even and >= 2");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const std::size_t pairs = outcomes / 2;
  std::vector<double> weights(pairs);
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - uniform(rng));  // exponential draw -> uniform simplex
    total += w;
  }
  std::vector<HermitianMatrix> elements;
  elements.reserve(outcomes);
  for (std::size_t p = 0; p < pairs; ++p) {
    const double phi = 2.0 * std::numbers::pi * uniform(rng);
    const double w = weights[p] / total;
    const CVector a = equator_state(phi);
    const CVector b = equator_state(phi + std::numbers::pi);
    elements.emplace_back(CMatrix(w * (a * a.adjoint())));
    elements.emplace_back(CMatrix(w * (b * b.adjoint())));
  }
  return Povm(std::move(elements));
}

}  // namespace menos
