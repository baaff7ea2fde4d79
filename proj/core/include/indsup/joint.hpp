#pragma once
// Two-source supervision: compose a pair of transition classes into a single
// class over a combined outcome space, either keeping the sources
// distinguishable (tagged disjoint outcomes) or merging outcomes by name.
// Provides the mixture-bound check on pairwise separation and the
// constrained "learning from differences" construction.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indsup/scenario.hpp"
#include "indsup/separation.hpp"
#include "indsup/transition.hpp"

namespace indsup {

// coef1 * p1 + coef2 * p2 <= bound over the member parameters of the two
// sources; evaluated with a 1e-9 slack so grid boundary pairs survive
// rounding.
struct JointConstraint {
  double coef1 = 0;
  double coef2 = 0;
  double bound = 0;
};

struct JointSpec {
  TransitionClass class1;
  TransitionClass class2;
  double lambda = 0.5;       // weight of source 1, strictly inside (0, 1)
  bool distinguished = true; // tag outcomes "1:..."/"2:..." instead of merging
  std::optional<JointConstraint> constraint;
};

// Members are the (member1, member2) pairs passing the constraint, in
// lexicographic index order. Distinguished rows are the concatenation
// [lambda * row1, (1-lambda) * row2]; merged rows add mass on outcome-name
// collisions. Throws BadParamsError (lambda, or a constraint without member
// parameters), SpaceMismatchError (label spaces or instance counts), and
// EmptyAfterConstraintError.
TransitionClass compose_joint(const JointSpec& spec);

// The tagged outcome space a distinguished composition produces.
FiniteSpace distinguished_outcome_space(const FiniteSpace& o1, const FiniteSpace& o2);
// The name-merged outcome space a mixed composition produces.
FiniteSpace merged_outcome_space(const FiniteSpace& o1, const FiniteSpace& o2);

// Shared context for single-source and joint separation computations.
struct JointContext {
  Distribution dx;
  std::vector<std::size_t> h0;
  HypothesisClass hclass;
};

struct NoFreeSeparationReport {
  std::size_t label_i = 0;
  std::size_t label_j = 0;
  double lambda = 0;
  double gamma_source1 = 0;
  double gamma_source2 = 0;
  double mixture_bound = 0;              // lambda * g1 + (1 - lambda) * g2
  double gamma_joint_distinguished = 0;
  double gamma_joint_mixed = 0;
  double slack_distinguished = 0;        // mixture_bound - distinguished value
  double slack_mixed = 0;                // mixture_bound - mixed value
  bool inequality_holds = false;         // both joint values <= bound (+tol)
  bool equality_holds = false;           // distinguished value == bound (+-tol)
  // Set when either source is instance-dependent: the mixture bound is only
  // guaranteed for instance-independent sources (per-instance minima need
  // not align across sources).
  bool instance_dependent_caveat = false;
};

// Directed pairwise separation of each source and of both compositions, with
// the mixture bound lambda * gamma1 + (1 - lambda) * gamma2. Infinite values
// compare as equal to infinite bounds.
NoFreeSeparationReport verify_no_free_separation(const TransitionClass& class1,
                                                 const TransitionClass& class2, double lambda,
                                                 const JointContext& context, std::size_t i,
                                                 std::size_t j);

struct DifferenceScenario {
  Scenario scenario;          // distinguished joint class under the gap constraint
  EvidenceTable evidence;     // difference evidence for both ordered pairs
  EvidenceReport evidence_report;
  double marginal_gamma_1 = 0;  // separation of source 1 alone (expected 0)
  double marginal_gamma_2 = 0;  // separation of source 2 alone (expected 0)
};

// The two-annotator difference construction: binary labels, two noise-rate
// grids joined distinguished under the constraint rate1 - rate2 <= gap with
// gap < 0, and the evidence vectors (e_1/lambda - e_3/(1-lambda) and its
// negation) that certify separation even though each marginal grid alone has
// none. Throws BadParamsError (gap >= 0 or lambda outside (0,1)) and
// EmptyAfterConstraintError.
DifferenceScenario difference_scenario(double lambda, double gap,
                                       const std::vector<std::pair<double, double>>& rate_grid);

}  // namespace indsup
