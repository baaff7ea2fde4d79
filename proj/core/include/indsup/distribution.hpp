#pragma once
// Probability vectors over finite spaces and the divergence primitives used
// throughout the library.
//
// Conventions, pinned once here and relied on everywhere:
//   * logarithms are natural,
//   * 0 * log(0/q) = 0,
//   * KL is +infinity exactly when p puts mass where q has none, and the
//     infinity is an explicit IEEE infinity, never a NaN,
//   * construction renormalizes, so downstream exact-expectation code can
//     treat the entries as summing to one.

#include <span>
#include <vector>

#include "indsup/space.hpp"

namespace indsup {

// Non-negative extended real produced by divergence computations.
class DivergenceValue {
 public:
  static DivergenceValue finite(double v);
  static DivergenceValue infinite();

  double value() const { return value_; }  // +infinity when not finite
  bool is_finite() const;

 private:
  explicit DivergenceValue(double v) : value_(v) {}
  double value_;
};

class Distribution {
 public:
  // Validates (length, sign, positive mass) and normalizes.
  static Distribution normalized(FiniteSpace space, std::span<const double> weights);
  static Distribution point_mass(FiniteSpace space, std::size_t index);

  const FiniteSpace& space() const { return space_; }
  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const;
  const std::vector<double>& probs() const { return probs_; }

 private:
  Distribution(FiniteSpace space, std::vector<double> probs);

  FiniteSpace space_;
  std::vector<double> probs_;
};

// Free-function spelling of Distribution::normalized.
Distribution make_distribution(const FiniteSpace& space, std::span<const double> weights);

DivergenceValue kl(const Distribution& p, const Distribution& q);
double total_variation(const Distribution& p, const Distribution& q);
double entropy(const Distribution& p);

}  // namespace indsup
