#include "indsup/transition.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace indsup {

namespace {

double min_positive_entry(const std::vector<Distribution>& rows) {
  double floor = 1.0;
  for (const auto& row : rows) {
    for (double p : row.probs()) {
      if (p > 0 && p < floor) {
        floor = p;
      }
    }
  }
  return floor;
}

}  // namespace

TransitionHypothesis::TransitionHypothesis(FiniteSpace ls, FiniteSpace as, bool constant,
                                           std::size_t n, std::vector<Distribution> rows)
    : label_space_(std::move(ls)),
      annotation_space_(std::move(as)),
      constant_(constant),
      num_instances_(n),
      rows_(std::move(rows)),
      entry_floor_(min_positive_entry(rows_)) {
  for (const auto& row : rows_) {
    if (row.space() != annotation_space_) {
      throw SpaceMismatchError("transition row lives on the wrong annotation space");
    }
  }
}

TransitionHypothesis TransitionHypothesis::constant(FiniteSpace label_space,
                                                    FiniteSpace annotation_space,
                                                    std::vector<Distribution> rows) {
  if (rows.size() != label_space.size()) {
    throw LengthMismatchError("constant transition needs one row per label");
  }
  return TransitionHypothesis(std::move(label_space), std::move(annotation_space), true, 0,
                              std::move(rows));
}

TransitionHypothesis TransitionHypothesis::constant_from_matrix(
    FiniteSpace label_space, FiniteSpace annotation_space,
    const std::vector<std::vector<double>>& matrix) {
  std::vector<Distribution> rows;
  rows.reserve(matrix.size());
  for (const auto& row : matrix) {
    rows.push_back(make_distribution(annotation_space, row));
  }
  return constant(std::move(label_space), std::move(annotation_space), std::move(rows));
}

TransitionHypothesis TransitionHypothesis::instance_dependent(FiniteSpace label_space,
                                                              FiniteSpace annotation_space,
                                                              std::size_t num_instances,
                                                              std::vector<Distribution> rows) {
  if (num_instances == 0) {
    throw BadParamsError("instance-dependent transition needs at least one instance");
  }
  if (rows.size() != num_instances * label_space.size()) {
    throw LengthMismatchError("instance-dependent transition needs num_instances * num_labels rows");
  }
  return TransitionHypothesis(std::move(label_space), std::move(annotation_space), false,
                              num_instances, std::move(rows));
}

const Distribution& TransitionHypothesis::row(std::size_t x, std::size_t label) const {
  if (label >= label_space_.size()) {
    throw IndexOutOfRangeError("transition row label out of range");
  }
  if (constant_) {
    return rows_[label];
  }
  if (x >= num_instances_) {
    throw IndexOutOfRangeError("transition row instance out of range");
  }
  return rows_[x * label_space_.size() + label];
}

bool transitions_match(const TransitionHypothesis& a, const TransitionHypothesis& b,
                       std::size_t num_instances, double tolerance) {
  if (a.label_space() != b.label_space() || a.annotation_space() != b.annotation_space()) {
    return false;
  }
  const std::size_t span = (a.constant() && b.constant()) ? 1 : num_instances;
  for (std::size_t x = 0; x < span; ++x) {
    for (std::size_t i = 0; i < a.num_labels(); ++i) {
      const auto& ra = a.row(x, i).probs();
      const auto& rb = b.row(x, i).probs();
      for (std::size_t o = 0; o < ra.size(); ++o) {
        if (std::abs(ra[o] - rb[o]) > tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

TransitionClass::TransitionClass(std::vector<TransitionHypothesis> members,
                                 ClassProvenance provenance, bool from_grid,
                                 std::vector<double> params)
    : members_(std::move(members)),
      provenance_(provenance),
      from_grid_(from_grid),
      params_(std::move(params)) {
  if (members_.empty()) {
    throw EmptyGridError("transition class needs at least one member");
  }
  if (!params_.empty() && params_.size() != members_.size()) {
    throw LengthMismatchError("member parameter list must match the member count");
  }
  const auto& ls = members_.front().label_space();
  const auto& as = members_.front().annotation_space();
  for (const auto& m : members_) {
    if (m.label_space() != ls || m.annotation_space() != as) {
      throw SpaceMismatchError("transition class members disagree on their spaces");
    }
  }
  floor_ = 1.0;
  for (const auto& m : members_) {
    floor_ = std::min(floor_, m.entry_floor());
  }
}

const TransitionHypothesis& TransitionClass::member(std::size_t k) const {
  if (k >= members_.size()) {
    throw IndexOutOfRangeError("transition class member index out of range");
  }
  return members_[k];
}

FiniteSpace subset_space(const FiniteSpace& label_space) {
  const std::size_t c = label_space.size();
  std::vector<std::string> names;
  names.reserve(std::size_t{1} << c);
  for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < c; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (!first) {
          name += ",";
        }
        name += label_space.name(i);
        first = false;
      }
    }
    name += "}";
    names.push_back(std::move(name));
  }
  return FiniteSpace(std::move(names));
}

namespace {

TransitionClass build_explicit(const ExplicitClassSpec& spec) {
  if (spec.members.empty()) {
    throw EmptyGridError("explicit transition class has no members");
  }
  return TransitionClass(spec.members, ClassProvenance::explicit_list, false);
}

TransitionClass build_uniform_noise(const UniformNoiseGridSpec& spec) {
  const std::size_t c = spec.label_space.size();
  if (c < 2) {
    throw BadParamsError("uniform noise needs at least two labels");
  }
  if (spec.rates.empty()) {
    throw EmptyGridError("uniform noise grid has no rates");
  }
  FiniteSpace annotation_space(spec.label_space.names());
  std::vector<TransitionHypothesis> members;
  members.reserve(spec.rates.size());
  for (double r : spec.rates) {
    if (r < 0 || r > 1) {
      throw BadParamsError("noise rate must lie in [0, 1]");
    }
    std::vector<Distribution> rows;
    rows.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<double> row(c, r / static_cast<double>(c - 1));
      row[i] = 1.0 - r;
      rows.push_back(make_distribution(annotation_space, row));
    }
    members.push_back(
        TransitionHypothesis::constant(spec.label_space, annotation_space, std::move(rows)));
  }
  return TransitionClass(std::move(members), ClassProvenance::uniform_noise_grid, true, spec.rates);
}

TransitionClass build_superset_noise(const SupersetNoiseGridSpec& spec) {
  const std::size_t c = spec.label_space.size();
  if (c >= 63 || (std::size_t{1} << c) > spec.outcome_cap) {
    throw SpaceTooLargeError("superset outcome space 2^" + std::to_string(c) +
                             " exceeds the cap of " + std::to_string(spec.outcome_cap));
  }
  if (spec.q_in.empty()) {
    throw EmptyGridError("superset noise grid has no inclusion probabilities");
  }
  const FiniteSpace outcome_space = subset_space(spec.label_space);
  const std::size_t s = outcome_space.size();
  const double group = static_cast<double>(s / 2);  // subsets containing (or excluding) a label
  std::vector<TransitionHypothesis> members;
  members.reserve(spec.q_in.size());
  for (double q : spec.q_in) {
    if (q < 0 || q > 1) {
      throw BadParamsError("inclusion probability must lie in [0, 1]");
    }
    std::vector<Distribution> rows;
    rows.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<double> row(s, 0.0);
      for (std::size_t mask = 0; mask < s; ++mask) {
        const bool contains = (mask & (std::size_t{1} << i)) != 0;
        row[mask] = (contains ? q : 1.0 - q) / group;
      }
      rows.push_back(make_distribution(outcome_space, row));
    }
    members.push_back(
        TransitionHypothesis::constant(spec.label_space, outcome_space, std::move(rows)));
  }
  return TransitionClass(std::move(members), ClassProvenance::superset_noise_grid, true,
                         spec.q_in);
}

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

TransitionClass build_logistic(const LogisticGridSpec& spec) {
  if (spec.label_space.size() != 2) {
    throw BadParamsError("logistic noise is defined for exactly two labels");
  }
  if (spec.w_lattice.empty()) {
    throw EmptyGridError("logistic grid has no weight vectors");
  }
  if (spec.embeddings.empty()) {
    throw EmptyGridError("logistic grid has no instance embeddings");
  }
  const std::size_t dim = spec.embeddings.front().size();
  for (const auto& e : spec.embeddings) {
    if (e.size() != dim) {
      throw DimensionMismatchError("instance embeddings disagree on their dimension");
    }
  }
  FiniteSpace annotation_space(spec.label_space.names());
  const std::size_t n = spec.embeddings.size();
  std::vector<TransitionHypothesis> members;
  members.reserve(spec.w_lattice.size());
  for (const auto& w : spec.w_lattice) {
    if (w.size() != dim) {
      throw DimensionMismatchError("weight vector dimension does not match the embeddings");
    }
    std::vector<Distribution> rows;
    rows.reserve(n * 2);
    for (std::size_t x = 0; x < n; ++x) {
      double dot = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        dot += w[k] * spec.embeddings[x][k];
      }
      const double flip = sigmoid(dot);
      rows.push_back(make_distribution(annotation_space, std::vector<double>{1.0 - flip, flip}));
      rows.push_back(make_distribution(annotation_space, std::vector<double>{flip, 1.0 - flip}));
    }
    members.push_back(TransitionHypothesis::instance_dependent(spec.label_space, annotation_space,
                                                               n, std::move(rows)));
  }
  return TransitionClass(std::move(members), ClassProvenance::logistic_grid, true);
}

}  // namespace

TransitionClass build_class(const TransitionClassSpec& spec) {
  return std::visit(
      [](const auto& s) -> TransitionClass {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitClassSpec>) {
          return build_explicit(s);
        } else if constexpr (std::is_same_v<T, UniformNoiseGridSpec>) {
          return build_uniform_noise(s);
        } else if constexpr (std::is_same_v<T, SupersetNoiseGridSpec>) {
          return build_superset_noise(s);
        } else {
          return build_logistic(s);
        }
      },
      spec);
}

const Distribution& induced_distribution(const TransitionClass& tclass, std::size_t k,
                                         std::size_t x, std::size_t label) {
  return tclass.member(k).row(x, label);
}

std::vector<Distribution> induced_family(const TransitionClass& tclass, std::size_t x,
                                         std::size_t label) {
  std::vector<Distribution> family;
  family.reserve(tclass.size());
  for (std::size_t k = 0; k < tclass.size(); ++k) {
    family.push_back(tclass.member(k).row(x, label));
  }
  return family;
}

}  // namespace indsup
