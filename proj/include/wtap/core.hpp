#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wtap {

using Vertex = std::int32_t;
using LinkId = std::int32_t;
using Weight = std::int64_t;
using Int128 = __int128;

inline constexpr Vertex kNoVertex = -1;
inline constexpr LinkId kNoLink = -1;
inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max() / 4;

// Raised when an exhaustive routine would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when no feasible cover exists for an instance that was expected to
// have one.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Int128 value);

}  // namespace wtap
