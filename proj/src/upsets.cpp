#include "fkglab/upsets.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fkglab/rational.hpp"

namespace fkglab {

bool is_upset(const PointSet& s) {
  int n = s.dim();
  for (std::uint32_t v = 0; v < s.universe(); ++v) {
    if (!s.test(v)) continue;
    for (int i = 0; i < n; ++i) {
      std::uint32_t up = v | (1u << i);
      if (up != v && !s.test(up)) return false;
    }
  }
  return true;
}

namespace {

// Points in the order used by the recursion: descending popcount, then
// descending value, so every successor of a point precedes it.
std::vector<std::uint32_t> recursion_order(int n) {
  std::vector<std::uint32_t> pts(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < pts.size(); ++v) pts[v] = v;
  std::sort(pts.begin(), pts.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa > pb;
    return a > b;
  });
  return pts;
}

void extend(const std::vector<std::uint32_t>& pts, std::size_t idx, int n,
            std::uint32_t chosen, std::vector<PointSet>& out) {
  if (idx == pts.size()) {
    PointSet s(n);
    for (std::uint32_t v = 0; v < (1u << n); ++v)
      if ((chosen >> v) & 1u) s.set(v);
    out.push_back(s);
    return;
  }
  std::uint32_t v = pts[idx];
  extend(pts, idx + 1, n, chosen, out);
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    std::uint32_t up = v | (1u << i);
    if (up != v && !((chosen >> up) & 1u)) ok = false;
  }
  if (ok) extend(pts, idx + 1, n, chosen | (1u << v), out);
}

}  // namespace

std::vector<PointSet> enumerate_upsets(int dim) {
  if (dim < 0 || dim > kMaxUpsetDim)
    throw CapacityError("upset enumeration supports dimension <= " +
                        std::to_string(kMaxUpsetDim) + ", got " +
                        std::to_string(dim));
  std::vector<PointSet> out;
  extend(recursion_order(dim), 0, dim, 0, out);
  return out;
}

const std::vector<PointSet>& cached_upsets(int dim) {
  static std::vector<PointSet> cache[kMaxUpsetDim + 1];
  static std::once_flag flags[kMaxUpsetDim + 1];
  if (dim < 0 || dim > kMaxUpsetDim)
    throw CapacityError("upset enumeration supports dimension <= " +
                        std::to_string(kMaxUpsetDim) + ", got " +
                        std::to_string(dim));
  std::call_once(flags[dim], [dim] { cache[dim] = enumerate_upsets(dim); });
  return cache[dim];
}

}  // namespace fkglab
