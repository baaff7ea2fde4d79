#include "indsup/text.hpp"

#include <charconv>
#include <cmath>

namespace indsup {

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;  // shortest round-trip formatting cannot fail on a 64-byte buffer
  return std::string(buf, ptr);
}

std::string format_size(std::size_t v) { return std::to_string(v); }

}  // namespace indsup
