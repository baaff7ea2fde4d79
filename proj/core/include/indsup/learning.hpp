#pragma once
// Empirical risk minimization over the (hypothesis x transition) grid and
// the learning-curve machinery that compares observed risks against the
// finite-sample bound
//
//   bound(m) = (2 b / eta) * ( sqrt(2 G / m) + 4 G / m + sqrt(2 log(4/delta) / m) )
//
// with G = gamma_bar(m, d) the growth term.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "indsup/scenario.hpp"

namespace indsup {

struct ErmResult {
  std::size_t h_index = 0;
  std::size_t t_index = 0;
  double empirical_risk = 0;              // may be +infinity
  std::size_t ties = 1;                   // candidates sharing the minimum
  double true_classification_risk = 0;    // risk of the selected hypothesis
};

// Full scan over every (hypothesis, transition) candidate, minimizing the
// empirical annotation risk. Infinite-risk candidates rank after all finite
// ones; ties break toward the lexicographically first (h, t) pair.
ErmResult erm(const Scenario& scenario, const Dataset& dataset);

struct BoundInputs {
  double b = 0;              // loss ceiling
  double eta = 0;            // identifiability level (or a lower bound)
  std::string eta_source;    // "eta", "gamma", or "gamma_c"
  std::size_t d = 0;         // threshold dimension (exact or composition bound)
  std::string d_source;      // "exact" or "composition_bound"
  double delta = 0.05;
};

struct BoundCaps {
  std::size_t eta_pair_cap = 1u << 15;      // |H| * |T| limit for exact eta
  std::size_t exact_point_cap = 12;         // composed-dimension point limit
  std::size_t natarajan_cap = 16;
  std::size_t transition_point_cap = 24;
};

// Assemble the constants the bound needs: the loss ceiling, an
// identifiability value (exact when the grid is small, else the separation
// lower bound matching the loss), and a threshold dimension (exact when the
// point universe is small, else the composition bound).
BoundInputs compute_bound_inputs(const Scenario& scenario, double delta,
                                 const BoundCaps& caps = {});

// The finite-sample bound itself. Preconditions: b > 0, eta > 0, m >= 1,
// delta in (0, 1); violations throw BadParamsError.
double theorem_bound(double b, double eta, std::size_t d, std::size_t m, double delta);

struct CurveRecord {
  std::size_t m = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double risk = 0;    // true classification risk of the trial's ERM pick
  double bound = 0;   // theorem bound at this m (+infinity when eta or b is 0)
  BoundInputs inputs;
};

struct CurveParams {
  std::vector<std::size_t> m_grid;  // strictly increasing
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;      // trial t uses base_seed + t
  double delta = 0.05;
};

// One record per (m, trial), ordered by m then trial. Trial t of every m
// uses seed base_seed + t.
std::vector<CurveRecord> learning_curve(const Scenario& scenario, const CurveParams& params,
                                        const BoundInputs& inputs);
std::vector<CurveRecord> learning_curve(const Scenario& scenario, const CurveParams& params);

// Fraction of trials whose ERM risk stays within the bound.
double bound_coverage(const Scenario& scenario, std::size_t m, double delta, std::size_t trials,
                      std::uint64_t base_seed, const BoundCaps& caps = {});

// CSV with the exact header m,trial,seed,risk,bound,b,eta,d,delta.
void write_curve_csv(std::ostream& out, const std::vector<CurveRecord>& records);

struct CurveAggregate {
  std::size_t m = 0;
  double mean_risk = 0;
  double q05 = 0;
  double q95 = 0;
  double bound = 0;
};

// Per-m mean and order-statistic quantiles (linear interpolation between
// adjacent order statistics).
std::vector<CurveAggregate> aggregate_curve(const std::vector<CurveRecord>& records);

// CSV with the exact header m,mean_risk,q05,q95,bound.
void write_aggregate_csv(std::ostream& out, const std::vector<CurveAggregate>& aggregates);

}  // namespace indsup
