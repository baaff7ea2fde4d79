#include "indsup/rng.hpp"

#include "indsup/error.hpp"

namespace indsup {

std::size_t sample_categorical(Engine& g, std::span<const double> probs) {
  if (probs.empty()) {
    throw BadParamsError("cannot sample from an empty probability vector");
  }
  const double u = uniform_unit(g);
  double cum = 0;
  std::size_t last_positive = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0) {
      continue;
    }
    last_positive = i;
    cum += probs[i];
    if (u < cum) {
      return i;
    }
  }
  if (last_positive == probs.size()) {
    throw BadParamsError("probability vector has no positive entry");
  }
  return last_positive;  // u landed in the rounding tail
}

std::size_t sample_index(Engine& g, std::size_t n) {
  if (n == 0) {
    throw BadParamsError("cannot sample an index from an empty range");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t v = g();
    if (v < limit) {
      return static_cast<std::size_t>(v % n);
    }
  }
}

}  // namespace indsup
