#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wpart {

using VertexId = std::uint32_t;
using NetId = std::uint32_t;
using BlockId = std::int32_t;
using Weight = std::int64_t;

inline constexpr BlockId kInvalidBlock = -1;

// All recoverable failures in the library surface as this exception type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("weight overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline Weight ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

}  // namespace wpart
