#pragma once

#include <vector>

#include "fkglab/point.hpp"

namespace fkglab {

inline constexpr int kMaxUpsetDim = 5;

// True iff v in S implies every one-coordinate successor of v is in S.
bool is_upset(const PointSet& s);

// All upward-closed subsets of {0,1}^dim in a fixed deterministic order.
// dim <= kMaxUpsetDim; the count grows as the Dedekind numbers.
std::vector<PointSet> enumerate_upsets(int dim);

// Same list, computed once per dimension and shared. Read-only.
const std::vector<PointSet>& cached_upsets(int dim);

}  // namespace fkglab
