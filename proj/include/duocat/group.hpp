#pragma once

#include <vector>

#include "duocat/core.hpp"

namespace duocat {

inline constexpr size_t kDefaultGroupBound = 10000;

/// Closure of the group generated by the given invertible matrices.
/// Throws Error("group too large") past `bound` elements and
/// Error("not a group action") on a non-invertible generator.
std::vector<Matrix> group_closure(const std::vector<Matrix>& generators,
                                  size_t bound = kDefaultGroupBound);

struct Coinvariants {
  Matrix projector;  // the averaging idempotent e
  Matrix inclusion;  // basis of im(e), one column per coinvariant dimension
  Matrix quotient;   // quotient * inclusion = identity, inclusion * quotient = e
};

/// Coinvariants of the action generated by the given square matrices,
/// computed as the image of the group averaging idempotent.
Coinvariants coinvariants(const std::vector<Matrix>& generators,
                          size_t bound = kDefaultGroupBound);

}  // namespace duocat
