#pragma once
// A scenario bundles everything that defines one indirect-supervision
// problem: the three finite spaces, the instance distribution, the true
// labeling rule and true annotation channel, the two candidate classes, and
// the loss. Labels are deterministic given the instance; the annotation is
// sampled from the true channel's row for the true label. Construction
// validates realizability: the true labeling rule must be in the hypothesis
// class and the true channel must match a class member entry-wise within
// 1e-12.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "indsup/distribution.hpp"
#include "indsup/hypothesis.hpp"
#include "indsup/losses.hpp"
#include "indsup/transition.hpp"

namespace indsup {

class Scenario {
 public:
  Scenario(FiniteSpace x_space, FiniteSpace y_space, FiniteSpace o_space, Distribution dx,
           std::vector<std::size_t> h0, TransitionHypothesis t0, HypothesisClass hclass,
           TransitionClass tclass, LossSpec loss);

  const FiniteSpace& x_space() const { return x_space_; }
  const FiniteSpace& y_space() const { return y_space_; }
  const FiniteSpace& o_space() const { return o_space_; }
  const Distribution& dx() const { return dx_; }
  const std::vector<std::size_t>& h0() const { return h0_; }
  const TransitionHypothesis& t0() const { return t0_; }
  const HypothesisClass& hclass() const { return hclass_; }
  const TransitionClass& tclass() const { return tclass_; }
  const LossSpec& loss() const { return loss_; }

  std::size_t num_instances() const { return x_space_.size(); }
  std::size_t num_labels() const { return y_space_.size(); }
  std::size_t num_outcomes() const { return o_space_.size(); }
  std::size_t h0_index() const { return h0_index_; }  // position in hclass
  std::size_t t0_index() const { return t0_index_; }  // position in tclass

 private:
  FiniteSpace x_space_;
  FiniteSpace y_space_;
  FiniteSpace o_space_;
  Distribution dx_;
  std::vector<std::size_t> h0_;
  TransitionHypothesis t0_;
  HypothesisClass hclass_;
  TransitionClass tclass_;
  LossSpec loss_;
  std::size_t h0_index_;
  std::size_t t0_index_;
};

// (instance, outcome) samples plus the seed that produced them, for replay.
struct Dataset {
  std::vector<std::pair<std::size_t, std::size_t>> samples;
  std::uint64_t seed = 0;

  std::size_t size() const { return samples.size(); }
};

// Probability that h disagrees with the true labeling under dx.
double classification_risk(const Scenario& scenario, const std::vector<std::size_t>& h);

// Exact expected annotation loss of (h, t) under the scenario's data law:
// sum over instances and outcomes weighted by dx and the true channel row.
// Returns +infinity when an infinite loss carries positive probability.
double annotation_risk(const Scenario& scenario, const std::vector<std::size_t>& h,
                       const TransitionHypothesis& t);

// Mean loss over the dataset, in sample order.
double empirical_annotation_risk(const std::vector<std::size_t>& h, const TransitionHypothesis& t,
                                 const Dataset& dataset, const LossSpec& loss);

// Draw m (instance, outcome) pairs: x by inverse CDF on dx, then the outcome
// by inverse CDF on the true channel's row for the true label.
Dataset sample_dataset(const Scenario& scenario, std::size_t m, std::uint64_t seed);

// Largest loss value the scenario can realize with positive probability:
// 1 for the concentration loss, -log(class floor) for cross-entropy. Throws
// UnboundedLossError (with a witness) if some class member has a zero entry
// at a reachable label for an outcome that carries data mass.
double loss_ceiling(const Scenario& scenario);

}  // namespace indsup
