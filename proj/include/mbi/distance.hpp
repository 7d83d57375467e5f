#pragma once

#include <cmath>
#include <limits>

namespace mbi {

/// Distance value for a pair with no path. Kept distinct from every finite
/// distance; sums involving it stay unreachable.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Absolute tolerance for comparing weighted path lengths. Unweighted
/// lengths are small integers held exactly in a double and compare with 0.
inline constexpr double kWeightedTolerance = 1e-9;

inline bool reachable(double d) noexcept { return d != kUnreachable; }

inline double concat(double a, double b) noexcept {
  return (reachable(a) && reachable(b)) ? a + b : kUnreachable;
}

/// How a candidate path length compares with the current distance.
enum class PathOrder { kShorter, kEqual, kLonger };

/// Orders `candidate` against `current`. An unreachable candidate is never
/// shorter or equal; any finite candidate beats an unreachable current.
inline PathOrder compare_path(double candidate, double current, double tol) noexcept {
  if (!reachable(candidate)) return PathOrder::kLonger;
  if (!reachable(current)) return PathOrder::kShorter;
  if (candidate < current - tol) return PathOrder::kShorter;
  if (candidate <= current + tol) return PathOrder::kEqual;
  return PathOrder::kLonger;
}

}  // namespace mbi
