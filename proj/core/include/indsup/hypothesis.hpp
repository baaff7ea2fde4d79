#pragma once
// Finite classifier classes over a finite instance space. A hypothesis is an
// assignment table: one label index per instance. Classes enumerate their
// tables in a fixed, documented order so everything downstream is
// deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "indsup/error.hpp"

namespace indsup {

enum class HypothesisProvenance {
  explicit_list,
  all_functions,
  threshold_1d,
};

class HypothesisClass {
 public:
  // Tables are kept in the given order; duplicates are allowed but flagged.
  static HypothesisClass explicit_list(std::vector<std::vector<std::size_t>> tables,
                                       std::size_t num_labels);
  // Every function from n instances to c labels, in lexicographic table
  // order (instance 0 is the most significant digit). Size c^n is capped.
  static HypothesisClass all_functions(std::size_t num_instances, std::size_t num_labels);
  // One-sided threshold classifiers over scalar embeddings: label 1 iff the
  // embedding is >= t. One table per distinct behavior, enumerated from the
  // all-ones table (lowest threshold) to the all-zeros table.
  static HypothesisClass threshold_1d(const std::vector<double>& embedding);

  std::size_t size() const { return tables_.size(); }
  const std::vector<std::size_t>& table(std::size_t k) const;
  const std::vector<std::vector<std::size_t>>& tables() const { return tables_; }
  std::size_t num_instances() const { return num_instances_; }
  std::size_t num_labels() const { return num_labels_; }
  HypothesisProvenance provenance() const { return provenance_; }
  bool has_duplicates() const { return has_duplicates_; }

  // Labels reachable at instance x (sorted, deduplicated).
  std::vector<std::size_t> labels_at(std::size_t x) const;
  std::optional<std::size_t> index_of(const std::vector<std::size_t>& table) const;

 private:
  HypothesisClass(std::vector<std::vector<std::size_t>> tables, std::size_t num_instances,
                  std::size_t num_labels, HypothesisProvenance provenance);

  std::vector<std::vector<std::size_t>> tables_;
  std::size_t num_instances_;
  std::size_t num_labels_;
  HypothesisProvenance provenance_;
  bool has_duplicates_;
};

}  // namespace indsup
