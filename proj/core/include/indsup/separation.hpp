#pragma once
// Separation and identifiability analysis on finite scenarios, computed
// exactly by enumeration.
//
// The separation degree is the smallest KL divergence between an annotation
// distribution attached to the true label and one attached to a reachable
// wrong label:
//
//   gamma = min KL(D_i || D_j) over instances x with dx(x) > 0, i the true
//   label at x, j != i reachable at x, D_i and D_j drawn from the class's
//   induced families at x.
//
// All minima are +infinity over empty ranges. Ties are broken toward the
// lexicographically smallest (x, i, j, member_i, member_j) tuple.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "indsup/scenario.hpp"

namespace indsup {

// The t0-free part of a scenario: enough to compute separation quantities.
struct SeparationProblem {
  const Distribution& dx;
  const std::vector<std::size_t>& h0;
  const HypothesisClass& hclass;
  const TransitionClass& tclass;
};

SeparationProblem separation_view(const Scenario& scenario);

struct SeparationWitness {
  std::size_t x = 0;
  std::size_t label_i = 0;
  std::size_t label_j = 0;
  std::size_t member_i = 0;  // class member supplying D_i
  std::size_t member_j = 0;  // class member supplying D_j
};

struct SeparationReport {
  double gamma = std::numeric_limits<double>::infinity();
  // Row-major c x c table of directed pair minima; diagonal entries are NaN
  // and never read, unrealized pairs stay +infinity.
  std::vector<double> pairwise;
  std::size_t num_labels = 0;
  std::optional<SeparationWitness> witness;  // absent when gamma is infinite
  bool grid_caveat = false;  // class came from a parameter grid: the minimum
                             // is over the grid, not the continuum
};

SeparationReport separation_degree(const SeparationProblem& problem);
SeparationReport separation_degree(const Scenario& scenario);

struct PairwiseSeparation {
  double value = std::numeric_limits<double>::infinity();
  std::optional<SeparationWitness> witness;
};

// Directed separation for one ordered label pair. Throws SameLabelError on
// i == j.
PairwiseSeparation pairwise_separation(const SeparationProblem& problem, std::size_t i,
                                       std::size_t j);
PairwiseSeparation pairwise_separation(const Scenario& scenario, std::size_t i, std::size_t j);

struct ConcentrationWitness {
  std::size_t x = 0;
  std::size_t label_i = 0;
  std::size_t label_j = 0;
  std::size_t member = 0;
};

struct ConcentrationReport {
  double value = std::numeric_limits<double>::infinity();
  std::optional<ConcentrationWitness> witness;
};

// Concentration margin of the outcome sets: the smallest value of
// P(O in S_i | x, i) - P(O in S_j | x, i) over class members, supported
// instances, and ordered label pairs i != j (both labels range over the full
// label set). May be negative; a positive value certifies separation.
ConcentrationReport concentration_degree(const SeparationProblem& problem,
                                         const OutcomeSets& sets);
ConcentrationReport concentration_degree(const Scenario& scenario, const OutcomeSets& sets);

// ----- evidence ------------------------------------------------------------

struct EvidenceVector {
  std::size_t label_i = 0;
  std::size_t label_j = 0;
  std::vector<double> u;  // one weight per outcome
};

using EvidenceTable = std::vector<EvidenceVector>;

struct EvidencePairResult {
  std::size_t label_i = 0;
  std::size_t label_j = 0;
  double margin = std::numeric_limits<double>::infinity();  // min <u,D_i> - <u,D_j>
  double sup_norm = 0;
  bool realizable = false;
  std::optional<SeparationWitness> witness;
};

struct EvidenceReport {
  bool ok = false;          // every realizable pair has a positive margin
  double bound = std::numeric_limits<double>::infinity();  // lower bound on gamma
  std::vector<EvidencePairResult> pairs;
  std::optional<std::size_t> failing_pair;  // index into pairs when not ok
};

// Linear-evidence lower bound on the separation degree:
//   bound = min over realizable pairs of (margin / sup_norm)^2 / 2.
// The table must contain exactly one vector for every realizable ordered
// pair. Throws ZeroVectorError on an all-zero vector, LengthMismatchError on
// a wrong-length vector, BadParamsError on duplicate or missing pairs.
EvidenceReport evidence_bound(const SeparationProblem& problem, const EvidenceTable& evidence);
EvidenceReport evidence_bound(const Scenario& scenario, const EvidenceTable& evidence);

// Evidence vectors induced by concentration sets: u_ij = 1[S_i] - 1[S_j] for
// every ordered pair.
EvidenceTable evidence_from_sets(const OutcomeSets& sets);

// ----- identifiability -----------------------------------------------------

struct EtaReport {
  double eta = std::numeric_limits<double>::infinity();
  std::size_t witness_h = 0;      // hypothesis index attaining the minimum
  std::size_t witness_t = 0;      // transition index attaining the minimum
  double numerator = 0;           // annotation excess risk at the witness
  double denominator = 0;         // classification risk at the witness
  double baseline = 0;            // min over the class of the truth's risk
};

// Exact identifiability level over the grid:
//   eta = min over h with positive classification risk and all t of
//         (annotation_risk(h, t) - baseline) / classification_risk(h).
// Throws NoWrongHypothesisError when every hypothesis has zero risk.
EtaReport identifiability_level(const Scenario& scenario);

// ----- non-learnability ----------------------------------------------------

struct NonLearnabilityWitness {
  std::size_t x = 0;         // support of the constructed point-mass
  std::size_t label_i = 0;   // true label at x
  std::size_t label_j = 0;   // confusable wrong label
  std::size_t member_i = 0;  // member acting as the true channel
  std::size_t member_j = 0;  // member supplying the confusable row
  std::vector<std::size_t> h_minus;  // hypothesis predicting j at x
  double kl_pair = 0;        // KL between the two rows
  double eta = 0;            // identifiability of the constructed scenario
  double threshold = 0;      // 1/k
  bool eta_below_threshold = false;
};

// When the class realizes separation below 1/k, builds the point-mass
// scenario from the separation witness and evaluates its identifiability:
// eta <= KL(D_i || D_j) < 1/k. Cross-entropy scenarios only. Throws
// SeparationHoldsError when gamma >= 1/k.
NonLearnabilityWitness non_learnability_witness(const Scenario& scenario, std::size_t k);

}  // namespace indsup
