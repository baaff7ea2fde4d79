#include "indsup/scenario.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "indsup/rng.hpp"

namespace indsup {

namespace {

constexpr double kRealizabilityTol = 1e-12;

}  // namespace

Scenario::Scenario(FiniteSpace x_space, FiniteSpace y_space, FiniteSpace o_space, Distribution dx,
                   std::vector<std::size_t> h0, TransitionHypothesis t0, HypothesisClass hclass,
                   TransitionClass tclass, LossSpec loss)
    : x_space_(std::move(x_space)),
      y_space_(std::move(y_space)),
      o_space_(std::move(o_space)),
      dx_(std::move(dx)),
      h0_(std::move(h0)),
      t0_(std::move(t0)),
      hclass_(std::move(hclass)),
      tclass_(std::move(tclass)),
      loss_(std::move(loss)) {
  const std::size_t n = x_space_.size();
  if (dx_.space() != x_space_) {
    throw SpaceMismatchError("instance distribution lives on the wrong space");
  }
  if (h0_.size() != n) {
    throw LengthMismatchError("the target labeling needs one label per instance");
  }
  for (std::size_t label : h0_) {
    if (label >= y_space_.size()) {
      throw IndexOutOfRangeError("the target labeling uses a label out of range");
    }
  }
  if (hclass_.num_instances() != n || hclass_.num_labels() != y_space_.size()) {
    throw SpaceMismatchError("hypothesis class shape does not match the scenario spaces");
  }
  if (t0_.label_space() != y_space_ || t0_.annotation_space() != o_space_) {
    throw SpaceMismatchError("target transition lives on the wrong spaces");
  }
  if (tclass_.label_space() != y_space_ || tclass_.annotation_space() != o_space_) {
    throw SpaceMismatchError("transition class lives on the wrong spaces");
  }
  if (!t0_.constant() && t0_.num_instances() != n) {
    throw SpaceMismatchError("target transition instance count does not match the scenario");
  }
  for (const auto& m : tclass_.members()) {
    if (!m.constant() && m.num_instances() != n) {
      throw SpaceMismatchError("transition class member instance count does not match");
    }
  }
  validate_loss_spec(loss_, y_space_.size(), o_space_.size());

  auto h0_idx = hclass_.index_of(h0_);
  if (!h0_idx) {
    throw InvalidScenarioError("the target labeling is not a member of the hypothesis class");
  }
  h0_index_ = *h0_idx;
  t0_index_ = tclass_.size();
  for (std::size_t k = 0; k < tclass_.size(); ++k) {
    if (transitions_match(tclass_.member(k), t0_, n, kRealizabilityTol)) {
      t0_index_ = k;
      break;
    }
  }
  if (t0_index_ == tclass_.size()) {
    throw InvalidScenarioError("the target transition is not a member of the transition class");
  }
}

double classification_risk(const Scenario& scenario, const std::vector<std::size_t>& h) {
  const auto& target = scenario.h0();
  if (h.size() != target.size()) {
    throw LengthMismatchError("assignment table length does not match the instance count");
  }
  double risk = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (h[x] != target[x]) {
      risk += scenario.dx().prob(x);
    }
  }
  return risk;
}

double annotation_risk(const Scenario& scenario, const std::vector<std::size_t>& h,
                       const TransitionHypothesis& t) {
  if (h.size() != scenario.num_instances()) {
    throw LengthMismatchError("assignment table length does not match the instance count");
  }
  const std::size_t s = scenario.num_outcomes();
  double risk = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    const double px = scenario.dx().prob(x);
    if (px == 0) {
      continue;
    }
    const auto& source = scenario.t0().row(x, scenario.h0()[x]).probs();
    for (std::size_t o = 0; o < s; ++o) {
      if (source[o] == 0) {
        continue;
      }
      const double loss = annotation_loss(scenario.loss(), h[x], t, x, o);
      if (std::isinf(loss)) {
        return std::numeric_limits<double>::infinity();
      }
      risk += px * source[o] * loss;
    }
  }
  return risk;
}

double empirical_annotation_risk(const std::vector<std::size_t>& h, const TransitionHypothesis& t,
                                 const Dataset& dataset, const LossSpec& loss) {
  if (dataset.samples.empty()) {
    throw EmptyDatasetError("cannot average losses over an empty dataset");
  }
  double sum = 0;
  for (const auto& [x, o] : dataset.samples) {
    if (x >= h.size()) {
      throw IndexOutOfRangeError("dataset instance index out of range for the assignment table");
    }
    const double value = annotation_loss(loss, h[x], t, x, o);
    if (std::isinf(value)) {
      return std::numeric_limits<double>::infinity();
    }
    sum += value;
  }
  return sum / static_cast<double>(dataset.samples.size());
}

Dataset sample_dataset(const Scenario& scenario, std::size_t m, std::uint64_t seed) {
  Engine engine(seed);
  Dataset dataset;
  dataset.seed = seed;
  dataset.samples.reserve(m);
  const auto& dx = scenario.dx().probs();
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t x = sample_categorical(engine, dx);
    const auto& row = scenario.t0().row(x, scenario.h0()[x]).probs();
    const std::size_t o = sample_categorical(engine, row);
    dataset.samples.emplace_back(x, o);
  }
  return dataset;
}

double loss_ceiling(const Scenario& scenario) {
  if (scenario.loss().kind == LossKind::concentration) {
    return 1.0;
  }
  // Cross-entropy: the ceiling is -log of the smallest transition entry that a
  // candidate could place on an outcome the data can actually produce. A zero
  // entry at such a position makes the loss unbounded.
  double floor = 1.0;
  const std::size_t n = scenario.num_instances();
  const std::size_t s = scenario.num_outcomes();
  for (std::size_t k = 0; k < scenario.tclass().size(); ++k) {
    const auto& member = scenario.tclass().member(k);
    for (std::size_t x = 0; x < n; ++x) {
      if (scenario.dx().prob(x) == 0) {
        continue;
      }
      const auto& truth_row = scenario.t0().row(x, scenario.h0()[x]).probs();
      for (std::size_t label : scenario.hclass().labels_at(x)) {
        const auto& row = member.row(x, label).probs();
        for (std::size_t o = 0; o < s; ++o) {
          if (truth_row[o] == 0) {
            continue;  // outcome never observed at this instance
          }
          if (row[o] <= 0) {
            throw UnboundedLossError(
                "cross-entropy is unbounded: class member " + std::to_string(k) +
                    " places zero mass on a data-supported outcome",
                k, x, label, o);
          }
          floor = std::min(floor, row[o]);
        }
      }
    }
  }
  return -std::log(floor);
}

}  // namespace indsup
