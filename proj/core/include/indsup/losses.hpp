#pragma once
// Annotation losses. Both losses score a predicted label against an observed
// annotation, possibly through a candidate transition. +infinity is a
// first-class loss value (cross-entropy against a zero entry); it is always
// an IEEE infinity, never a NaN.

#include <cstddef>
#include <vector>

#include "indsup/transition.hpp"

namespace indsup {

enum class LossKind {
  cross_entropy,
  concentration,
};

// One outcome mask per label, each of annotation-space length.
using OutcomeSets = std::vector<std::vector<bool>>;

// Build masks from outcome index lists. Throws BadSetError on out-of-range
// outcomes or a wrong number of sets.
OutcomeSets make_outcome_sets(std::size_t num_labels, std::size_t num_outcomes,
                              const std::vector<std::vector<std::size_t>>& indices);

struct LossSpec {
  LossKind kind = LossKind::cross_entropy;
  OutcomeSets sets;  // required exactly when kind == concentration
};

void validate_loss_spec(const LossSpec& loss, std::size_t num_labels, std::size_t num_outcomes);

// -log of the transition entry at (x, predicted label, outcome).
double cross_entropy_loss(std::size_t predicted_label, const TransitionHypothesis& t,
                          std::size_t x, std::size_t outcome);

// 1 if the outcome falls outside the predicted label's set, else 0. Does not
// depend on any transition.
double concentration_loss(std::size_t predicted_label, const OutcomeSets& sets,
                          std::size_t outcome);

// Dispatch on the loss kind.
double annotation_loss(const LossSpec& loss, std::size_t predicted_label,
                       const TransitionHypothesis& t, std::size_t x, std::size_t outcome);

}  // namespace indsup
