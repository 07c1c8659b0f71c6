#include "palw/integer.hpp"

#include <limits>
#include <stdexcept>

namespace palw {

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace palw
