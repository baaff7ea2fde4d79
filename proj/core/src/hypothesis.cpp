#include "indsup/hypothesis.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace indsup {

HypothesisClass::HypothesisClass(std::vector<std::vector<std::size_t>> tables,
                                 std::size_t num_instances, std::size_t num_labels,
                                 HypothesisProvenance provenance)
    : tables_(std::move(tables)),
      num_instances_(num_instances),
      num_labels_(num_labels),
      provenance_(provenance),
      has_duplicates_(false) {
  if (tables_.empty()) {
    throw EmptyGridError("hypothesis class needs at least one function");
  }
  if (num_labels_ == 0) {
    throw BadParamsError("hypothesis class needs at least one label");
  }
  if (num_instances_ == 0) {
    throw BadParamsError("hypothesis tables need at least one instance");
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& t : tables_) {
    if (t.size() != num_instances_) {
      throw LengthMismatchError("hypothesis tables disagree on the instance count");
    }
    for (std::size_t label : t) {
      if (label >= num_labels_) {
        throw IndexOutOfRangeError("hypothesis table predicts a label out of range");
      }
    }
    if (!seen.insert(t).second) {
      has_duplicates_ = true;
    }
  }
}

HypothesisClass HypothesisClass::explicit_list(std::vector<std::vector<std::size_t>> tables,
                                               std::size_t num_labels) {
  const std::size_t n = tables.empty() ? 0 : tables.front().size();
  return HypothesisClass(std::move(tables), n, num_labels, HypothesisProvenance::explicit_list);
}

HypothesisClass HypothesisClass::all_functions(std::size_t num_instances, std::size_t num_labels) {
  if (num_instances == 0 || num_labels == 0) {
    throw BadParamsError("all-functions class needs at least one instance and one label");
  }
  // c^n tables; refuse anything that would not fit in memory comfortably.
  double count = 1;
  for (std::size_t x = 0; x < num_instances; ++x) {
    count *= static_cast<double>(num_labels);
    if (count > 1e6) {
      throw SpaceTooLargeError("all-functions class would exceed 1e6 tables");
    }
  }
  const std::size_t total = static_cast<std::size_t>(count);
  std::vector<std::vector<std::size_t>> tables;
  tables.reserve(total);
  std::vector<std::size_t> table(num_instances, 0);
  for (std::size_t id = 0; id < total; ++id) {
    std::size_t rest = id;
    // Instance 0 is the most significant digit so tables come out in
    // lexicographic order of (table[0], table[1], ...).
    for (std::size_t x = num_instances; x-- > 0;) {
      table[x] = rest % num_labels;
      rest /= num_labels;
    }
    tables.push_back(table);
  }
  return HypothesisClass(std::move(tables), num_instances, num_labels,
                         HypothesisProvenance::all_functions);
}

HypothesisClass HypothesisClass::threshold_1d(const std::vector<double>& embedding) {
  if (embedding.empty()) {
    throw BadParamsError("threshold class needs at least one embedded instance");
  }
  const std::size_t n = embedding.size();
  // Label 1 iff embedding >= threshold. Sweeping the threshold upward through
  // the distinct embedding values enumerates every distinct table exactly
  // once, from all-ones (threshold at the minimum) to all-zeros (threshold
  // above the maximum).
  std::vector<double> sorted(embedding);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> thresholds(sorted);
  thresholds.push_back(sorted.back() + 1.0);
  std::vector<std::vector<std::size_t>> tables;
  tables.reserve(thresholds.size());
  for (double t : thresholds) {
    std::vector<std::size_t> table(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      table[x] = embedding[x] >= t ? 1 : 0;
    }
    tables.push_back(std::move(table));
  }
  return HypothesisClass(std::move(tables), n, 2, HypothesisProvenance::threshold_1d);
}

const std::vector<std::size_t>& HypothesisClass::table(std::size_t k) const {
  if (k >= tables_.size()) {
    throw IndexOutOfRangeError("hypothesis index out of range");
  }
  return tables_[k];
}

std::vector<std::size_t> HypothesisClass::labels_at(std::size_t x) const {
  if (x >= num_instances_) {
    throw IndexOutOfRangeError("instance index out of range");
  }
  std::vector<bool> present(num_labels_, false);
  for (const auto& t : tables_) {
    present[t[x]] = true;
  }
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < num_labels_; ++i) {
    if (present[i]) {
      labels.push_back(i);
    }
  }
  return labels;
}

std::optional<std::size_t> HypothesisClass::index_of(const std::vector<std::size_t>& table) const {
  for (std::size_t h = 0; h < tables_.size(); ++h) {
    if (tables_[h] == table) {
      return h;
    }
  }
  return std::nullopt;
}

}  // namespace indsup
