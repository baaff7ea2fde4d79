#include "indsup/distribution.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace indsup {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DivergenceValue DivergenceValue::finite(double v) {
  if (!(v >= 0)) {
    throw BadParamsError("divergence value must be non-negative");
  }
  return DivergenceValue(v);
}

DivergenceValue DivergenceValue::infinite() { return DivergenceValue(kInf); }

bool DivergenceValue::is_finite() const { return std::isfinite(value_); }

Distribution::Distribution(FiniteSpace space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs)) {}

Distribution Distribution::normalized(FiniteSpace space, std::span<const double> weights) {
  if (weights.size() != space.size()) {
    throw LengthMismatchError("weight vector length " + std::to_string(weights.size()) +
                              " does not match space size " + std::to_string(space.size()));
  }
  double sum = 0;
  for (double w : weights) {
    if (w < 0 || std::isnan(w)) {
      throw NegativeWeightError("distribution weights must be non-negative");
    }
    sum += w;
  }
  if (!(sum > 0) || !std::isfinite(sum)) {
    throw ZeroMassError("distribution weights must have positive finite mass");
  }
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& p : probs) {
    p /= sum;
  }
  return Distribution(std::move(space), std::move(probs));
}

Distribution Distribution::point_mass(FiniteSpace space, std::size_t index) {
  if (index >= space.size()) {
    throw IndexOutOfRangeError("point mass index out of range");
  }
  std::vector<double> probs(space.size(), 0.0);
  probs[index] = 1.0;
  return Distribution(std::move(space), std::move(probs));
}

double Distribution::prob(std::size_t i) const {
  if (i >= probs_.size()) {
    throw IndexOutOfRangeError("distribution index out of range");
  }
  return probs_[i];
}

Distribution make_distribution(const FiniteSpace& space, std::span<const double> weights) {
  return Distribution::normalized(space, weights);
}

DivergenceValue kl(const Distribution& p, const Distribution& q) {
  if (p.space() != q.space()) {
    throw SpaceMismatchError("kl operands live on different spaces");
  }
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.probs()[i];
    if (pi == 0) {
      continue;  // 0 * log(0/q) = 0
    }
    const double qi = q.probs()[i];
    if (qi == 0) {
      return DivergenceValue::infinite();
    }
    sum += pi * std::log(pi / qi);
  }
  // Rounding can push an identical-support sum a few ulps below zero.
  return DivergenceValue::finite(sum > 0 ? sum : 0.0);
}

double total_variation(const Distribution& p, const Distribution& q) {
  if (p.space() != q.space()) {
    throw SpaceMismatchError("total_variation operands live on different spaces");
  }
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += std::abs(p.probs()[i] - q.probs()[i]);
  }
  return 0.5 * sum;
}

double entropy(const Distribution& p) {
  double sum = 0;
  for (double pi : p.probs()) {
    if (pi > 0) {
      sum -= pi * std::log(pi);
    }
  }
  return sum > 0 ? sum : 0.0;
}

}  // namespace indsup
