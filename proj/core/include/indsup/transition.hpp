#pragma once
// Annotation channels: a transition hypothesis maps an instance to a
// row-stochastic matrix (one outcome distribution per label); a transition
// class is the finite candidate set the learner searches. Classes are built
// either from explicit matrices or from parameter grids, always in a
// deterministic enumeration order.

#include <cstddef>
#include <variant>
#include <vector>

#include "indsup/distribution.hpp"
#include "indsup/space.hpp"

namespace indsup {

class TransitionHypothesis {
 public:
  // One row per label, shared by every instance.
  static TransitionHypothesis constant(FiniteSpace label_space, FiniteSpace annotation_space,
                                       std::vector<Distribution> rows);
  // Row-major matrix (label index i -> row over outcomes), normalized per row.
  static TransitionHypothesis constant_from_matrix(FiniteSpace label_space,
                                                   FiniteSpace annotation_space,
                                                   const std::vector<std::vector<double>>& matrix);
  // rows laid out instance-major: rows[x * num_labels + i].
  static TransitionHypothesis instance_dependent(FiniteSpace label_space,
                                                 FiniteSpace annotation_space,
                                                 std::size_t num_instances,
                                                 std::vector<Distribution> rows);

  // Constant hypotheses accept any x; instance-dependent ones check the range.
  const Distribution& row(std::size_t x, std::size_t label) const;

  bool constant() const { return constant_; }
  std::size_t num_instances() const { return num_instances_; }  // 0 when constant
  std::size_t num_labels() const { return label_space_.size(); }
  std::size_t num_outcomes() const { return annotation_space_.size(); }
  const FiniteSpace& label_space() const { return label_space_; }
  const FiniteSpace& annotation_space() const { return annotation_space_; }

  // Smallest strictly positive matrix entry; in (0, 1].
  double entry_floor() const { return entry_floor_; }

 private:
  TransitionHypothesis(FiniteSpace ls, FiniteSpace as, bool constant, std::size_t n,
                       std::vector<Distribution> rows);

  FiniteSpace label_space_;
  FiniteSpace annotation_space_;
  bool constant_;
  std::size_t num_instances_;
  std::vector<Distribution> rows_;
  double entry_floor_;
};

// Entry-wise match over the first num_instances instances.
bool transitions_match(const TransitionHypothesis& a, const TransitionHypothesis& b,
                       std::size_t num_instances, double tolerance);

enum class ClassProvenance {
  explicit_list,
  uniform_noise_grid,
  superset_noise_grid,
  logistic_grid,
  joint,
};

class TransitionClass {
 public:
  // params, when non-empty, carries one scalar parameter per member (noise
  // rate, inclusion probability); joint composition constraints act on it.
  TransitionClass(std::vector<TransitionHypothesis> members, ClassProvenance provenance,
                  bool from_grid, std::vector<double> params = {});

  std::size_t size() const { return members_.size(); }
  const TransitionHypothesis& member(std::size_t k) const;
  const std::vector<TransitionHypothesis>& members() const { return members_; }
  ClassProvenance provenance() const { return provenance_; }
  bool from_grid() const { return from_grid_; }
  const std::vector<double>& params() const { return params_; }
  const FiniteSpace& label_space() const { return members_.front().label_space(); }
  const FiniteSpace& annotation_space() const { return members_.front().annotation_space(); }

  // Smallest strictly positive entry across all members.
  double floor() const { return floor_; }

 private:
  std::vector<TransitionHypothesis> members_;
  ClassProvenance provenance_;
  bool from_grid_;
  std::vector<double> params_;
  double floor_;
};

// ----- class builders ------------------------------------------------------

struct ExplicitClassSpec {
  std::vector<TransitionHypothesis> members;
};

// Outcomes equal the labels; each rate r yields the constant matrix with
// diagonal 1-r and off-diagonal r/(c-1). Requires at least two labels.
struct UniformNoiseGridSpec {
  FiniteSpace label_space;
  std::vector<double> rates;
};

// Outcomes are the label subsets (bitmask order, names like "{a,b}"). For
// inclusion probability q, the subsets containing the true label share mass q
// uniformly and the subsets excluding it share 1-q uniformly.
struct SupersetNoiseGridSpec {
  FiniteSpace label_space;
  std::vector<double> q_in;
  std::size_t outcome_cap = 4096;  // refuse label spaces with 2^c beyond this
};

// Binary labels, outcomes equal labels. Weight vector w flips the reported
// label with probability sigmoid(dot(w, embedding(x))); one member per
// lattice point, instance-dependent.
struct LogisticGridSpec {
  FiniteSpace label_space;  // must have exactly two labels
  std::vector<std::vector<double>> embeddings;  // one vector per instance
  std::vector<std::vector<double>> w_lattice;
};

using TransitionClassSpec =
    std::variant<ExplicitClassSpec, UniformNoiseGridSpec, SupersetNoiseGridSpec, LogisticGridSpec>;

TransitionClass build_class(const TransitionClassSpec& spec);

// The label-subset outcome space used by superset noise: index = bitmask.
FiniteSpace subset_space(const FiniteSpace& label_space);

// Distribution of the annotation for class member k at (x, label).
const Distribution& induced_distribution(const TransitionClass& tclass, std::size_t k,
                                         std::size_t x, std::size_t label);

// All members' annotation distributions at (x, label), in member order.
std::vector<Distribution> induced_family(const TransitionClass& tclass, std::size_t x,
                                         std::size_t label);

}  // namespace indsup
