#pragma once
// Finite named spaces. Elements are addressed by index everywhere; the names
// exist for configs and reports. Copies are cheap (shared storage) and
// equality compares the name lists.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indsup/error.hpp"

namespace indsup {

class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const;
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Convenience: {prefix1, ..., prefixN}.
FiniteSpace numbered_space(std::string_view prefix, std::size_t count);

}  // namespace indsup
