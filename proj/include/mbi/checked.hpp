#pragma once

#include <cstdint>

#include "mbi/errors.hpp"

namespace mbi {

using PathCount = std::uint64_t;

inline PathCount checked_add(PathCount a, PathCount b) {
  PathCount r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("shortest-path count overflow (add)");
  return r;
}

inline PathCount checked_mul(PathCount a, PathCount b) {
  PathCount r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("shortest-path count overflow (mul)");
  return r;
}

}  // namespace mbi
