#include "indsup/losses.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace indsup {

OutcomeSets make_outcome_sets(std::size_t num_labels, std::size_t num_outcomes,
                              const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.size() != num_labels) {
    throw BadSetError("need exactly one outcome set per label");
  }
  OutcomeSets result(num_labels, std::vector<bool>(num_outcomes, false));
  for (std::size_t i = 0; i < num_labels; ++i) {
    if (sets[i].empty()) {
      throw BadSetError("outcome set for label " + std::to_string(i) + " is empty");
    }
    for (std::size_t o : sets[i]) {
      if (o >= num_outcomes) {
        throw BadSetError("outcome set for label " + std::to_string(i) +
                          " references outcome " + std::to_string(o) + " out of range");
      }
      result[i][o] = true;
    }
  }
  return result;
}

void validate_loss_spec(const LossSpec& spec, std::size_t num_labels, std::size_t num_outcomes) {
  if (spec.kind == LossKind::cross_entropy) {
    return;  // the sets are ignored
  }
  if (spec.sets.size() != num_labels) {
    throw BadSetError("concentration loss needs one outcome set per label");
  }
  for (std::size_t i = 0; i < num_labels; ++i) {
    if (spec.sets[i].size() != num_outcomes) {
      throw BadSetError("outcome set mask length does not match the outcome space");
    }
    bool any = false;
    for (bool b : spec.sets[i]) {
      any = any || b;
    }
    if (!any) {
      throw BadSetError("outcome set for label " + std::to_string(i) + " is empty");
    }
  }
}

double cross_entropy_loss(std::size_t predicted_label, const TransitionHypothesis& t,
                          std::size_t x, std::size_t outcome) {
  const double p = t.row(x, predicted_label).prob(outcome);
  if (p <= 0) {
    return std::numeric_limits<double>::infinity();
  }
  return -std::log(p);
}

double concentration_loss(std::size_t predicted_label, const OutcomeSets& sets,
                          std::size_t outcome) {
  if (predicted_label >= sets.size()) {
    throw IndexOutOfRangeError("predicted label out of range for the outcome sets");
  }
  if (outcome >= sets[predicted_label].size()) {
    throw IndexOutOfRangeError("outcome out of range for the outcome sets");
  }
  return sets[predicted_label][outcome] ? 0.0 : 1.0;
}

double annotation_loss(const LossSpec& spec, std::size_t predicted_label,
                       const TransitionHypothesis& t, std::size_t x, std::size_t outcome) {
  if (spec.kind == LossKind::cross_entropy) {
    return cross_entropy_loss(predicted_label, t, x, outcome);
  }
  return concentration_loss(predicted_label, spec.sets, outcome);
}

}  // namespace indsup
