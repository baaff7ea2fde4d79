#pragma once
// Deterministic number formatting: shortest round-trip decimal via
// std::to_chars, with "inf"/"-inf"/"nan" spellings for the non-finite
// values. Every file the library emits goes through these helpers so that
// rerunning a command reproduces its outputs byte for byte.

#include <string>

namespace indsup {

std::string format_double(double v);
std::string format_size(std::size_t v);

}  // namespace indsup
