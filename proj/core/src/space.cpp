#include "indsup/space.hpp"

#include <unordered_set>

namespace indsup {

FiniteSpace::FiniteSpace(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->empty()) {
    throw BadParamsError("finite space needs at least one element");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : *names_) {
    if (!seen.insert(n).second) {
      throw BadParamsError("duplicate element name in finite space: " + n);
    }
  }
}

const std::string& FiniteSpace::name(std::size_t i) const {
  if (i >= names_->size()) {
    throw IndexOutOfRangeError("space index " + std::to_string(i) + " out of range");
  }
  return (*names_)[i];
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

FiniteSpace numbered_space(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i + 1));
  }
  return FiniteSpace(std::move(names));
}

}  // namespace indsup
