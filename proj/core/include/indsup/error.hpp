#pragma once
// Error taxonomy for the library. Every condition a caller is expected to
// branch on gets its own exception type; all of them derive from Error.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indsup {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INDSUP_ERROR_TYPE(Name) \
  class Name : public Error {   \
   public:                      \
    using Error::Error;         \
  };

INDSUP_ERROR_TYPE(NegativeWeightError)     // distribution weight below zero
INDSUP_ERROR_TYPE(ZeroMassError)           // all distribution weights zero
INDSUP_ERROR_TYPE(LengthMismatchError)     // vector length disagrees with a space
INDSUP_ERROR_TYPE(SpaceMismatchError)      // operands live on different spaces
INDSUP_ERROR_TYPE(IndexOutOfRangeError)    // instance/label/outcome index out of range
INDSUP_ERROR_TYPE(EmptyGridError)          // transition class build with no members
INDSUP_ERROR_TYPE(DimensionMismatchError)  // embedding/-weight dimensions disagree
INDSUP_ERROR_TYPE(SpaceTooLargeError)      // derived outcome space exceeds its cap
INDSUP_ERROR_TYPE(CoverageGapError)        // assignment table does not cover the instances
INDSUP_ERROR_TYPE(EmptyDatasetError)       // empirical quantity over zero samples
INDSUP_ERROR_TYPE(SameLabelError)          // ordered label pair with i == j
INDSUP_ERROR_TYPE(BadSetError)             // outcome set references unknown outcomes
INDSUP_ERROR_TYPE(ZeroVectorError)         // evidence vector identically zero
INDSUP_ERROR_TYPE(NoWrongHypothesisError)  // every hypothesis matches the truth
INDSUP_ERROR_TYPE(SeparationHoldsError)    // separation too large for a witness
INDSUP_ERROR_TYPE(CapExceededError)        // exhaustive search cap exceeded
INDSUP_ERROR_TYPE(BadParamsError)          // parameter outside its admissible range
INDSUP_ERROR_TYPE(EmptyAfterConstraintError)  // joint constraint filtered all pairs
INDSUP_ERROR_TYPE(UnknownDemoError)        // demo name not in the bundled roster
INDSUP_ERROR_TYPE(InvalidScenarioError)    // scenario construction invariant broken

#undef INDSUP_ERROR_TYPE

// Cross-entropy over a class with a zero matrix entry that carries data mass.
// Carries the offending (transition, instance, label, outcome) witness.
class UnboundedLossError : public Error {
 public:
  UnboundedLossError(const std::string& message, std::size_t transition_index,
                     std::size_t instance, std::size_t label, std::size_t outcome)
      : Error(message),
        transition_index(transition_index),
        instance(instance),
        label(label),
        outcome(outcome) {}

  std::size_t transition_index;
  std::size_t instance;
  std::size_t label;
  std::size_t outcome;
};

}  // namespace indsup
