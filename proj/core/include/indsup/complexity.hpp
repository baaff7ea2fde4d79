#pragma once
// Combinatorial complexity measures, computed by brute force on small
// universes, plus the growth-term arithmetic and the Monte Carlo Rademacher
// estimate used to sanity-check generalization bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "indsup/hypothesis.hpp"
#include "indsup/losses.hpp"
#include "indsup/scenario.hpp"
#include "indsup/transition.hpp"

namespace indsup {

struct DimensionResult {
  std::size_t value = 0;
  bool exhaustive = true;            // false when found by randomized search
  std::vector<std::size_t> witness_points;  // ids in the search universe
  // Multi-label shattering only: the two label functions over the witness.
  std::vector<std::size_t> witness_f0;
  std::vector<std::size_t> witness_f1;
  // Threshold shattering only: the loss threshold attaining the maximum.
  std::optional<double> witness_threshold;
};

struct DimensionOptions {
  std::size_t point_cap = 16;        // refuse exhaustive search above this
  bool allow_randomized = false;     // fall back to a randomized lower bound
  std::size_t randomized_trials = 2000;
  std::uint64_t seed = 0;
};

// Default options for composed-loss searches, whose universe is the full
// (x, o) product and therefore grows much faster than the instance axis.
inline DimensionOptions composed_dimension_options() {
  DimensionOptions options;
  options.point_cap = 12;
  return options;
}

// Largest instance set the class multi-label-shatters: some pair of
// pointwise-different label functions (f0, f1) over the set has every
// f0/f1 mixture realized by the class. Exhaustive up to point_cap
// instances (default 16); beyond the cap, throws CapExceededError unless
// allow_randomized is set, in which case a verified lower bound with
// exhaustive = false is returned.
DimensionResult natarajan_dimension(const HypothesisClass& hclass,
                                    const DimensionOptions& options = {});

// Loss values of every function on every point; +infinity entries allowed.
struct LossValueMatrix {
  std::size_t num_points = 0;
  std::vector<std::vector<double>> values;  // values[function][point]
};

// Largest dimension over all loss thresholds u of the binary classes
// {1[value > u]}: only realized loss values need checking because the
// indicator family is constant between consecutive realized values. The
// witness records the threshold attaining the maximum.
DimensionResult weak_vc_major_from_matrix(const LossValueMatrix& matrix,
                                          const DimensionOptions& options = {});

// Threshold dimension of the composed class {(x, o) -> loss(h(x), t, x, o)}.
// Points are (x, o) pairs with id x * num_outcomes + o; default cap 12.
DimensionResult weak_vc_major_dimension(const HypothesisClass& hclass,
                                        const TransitionClass& tclass, const LossSpec& loss,
                                        std::size_t num_instances,
                                        const DimensionOptions& options =
                                            composed_dimension_options());
DimensionResult weak_vc_major_dimension(const Scenario& scenario,
                                        const DimensionOptions& options =
                                            composed_dimension_options());

struct TransitionDimensionResult {
  DimensionResult result;
  // True when every member is constant and the instance axis was collapsed;
  // point ids are then label * num_outcomes + outcome instead of
  // (x * num_labels + label) * num_outcomes + outcome.
  bool instance_collapsed = false;
};

// Threshold dimension of the transition-only class
// {(x, label, o) -> loss(label, t, x, o)} with the hypothesis factored out.
TransitionDimensionResult transition_weak_vc_dimension(const TransitionClass& tclass,
                                                       const LossSpec& loss,
                                                       std::size_t num_instances,
                                                       const DimensionOptions& options = {});

// Re-verify returned witnesses (used by the test suite).
bool verify_natarajan_witness(const HypothesisClass& hclass, const DimensionResult& result);
bool verify_weak_vc_witness(const LossValueMatrix& matrix, const DimensionResult& result);

// Composition bound on the threshold dimension from the two class
// dimensions: ceil(2 * ((dh + dt) * log(6 (dh + dt)) + 2 dh log c)), zero
// when dh + dt is zero. Requires c >= 2.
std::size_t dimension_bound(std::size_t d_h, std::size_t d_t, std::size_t num_labels);

// Growth term: log(2 * sum_{j <= min(d, m)} binom(m, j)). Exact integer
// accumulation when the sum fits 128 bits, else compensated log-space
// summation. m >= 1.
double gamma_bar(std::size_t m, std::size_t d);

struct RademacherEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t sample_size = 0;
  std::size_t trials = 0;
};

// Monte Carlo estimate of the averaged sign-symmetrized supremum
//   E (1/m) sup over (h, t) of | sum_i eps_i * loss(h(x_i), t, x_i, o_i) |
// with data drawn from the scenario's law and the supremum evaluated
// exactly by grid scan. Requires a bounded loss (propagates
// UnboundedLossError) and at least two trials.
RademacherEstimate rademacher_estimate(const Scenario& scenario, std::size_t m,
                                       std::size_t mc_trials, std::uint64_t seed);

}  // namespace indsup
