#include "fkglab/partition.hpp"

#include <stdexcept>
#include <string>

namespace fkglab {

PointSet Partition::a_set() const {
  PointSet s(dim);
  for (std::uint32_t v = 0; v < s.universe(); ++v)
    if (labels[v] == 0) s.set(v);
  return s;
}

PointSet Partition::b_set() const {
  PointSet s(dim);
  for (std::uint32_t v = 0; v < s.universe(); ++v)
    if (labels[v] == k + 1) s.set(v);
  return s;
}

PointSet Partition::c_set(int i) const {
  if (i < 1 || i > k) throw std::invalid_argument("block index out of range");
  PointSet s(dim);
  for (std::uint32_t v = 0; v < s.universe(); ++v)
    if (labels[v] == i) s.set(v);
  return s;
}

Partition validate_partition(int dim, int k, std::vector<int> labels) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("partition dimension out of range");
  if (k < 2)
    throw std::invalid_argument("at least two C blocks are required, got " +
                                std::to_string(k));
  if (labels.size() != (std::size_t{1} << dim))
    throw std::invalid_argument("label vector must have 2^dim entries");
  for (std::uint32_t v = 0; v < labels.size(); ++v)
    if (labels[v] < 0 || labels[v] > k + 1)
      throw std::invalid_argument("label out of range at point " +
                                  point_str(Point{v, dim}));
  // A u C_i upward closed for each i; checking covering pairs suffices.
  for (int i = 1; i <= k; ++i) {
    for (std::uint32_t v = 0; v < labels.size(); ++v) {
      bool in = labels[v] == 0 || labels[v] == i;
      if (!in) continue;
      for (int c = 0; c < dim; ++c) {
        std::uint32_t up = v | (1u << c);
        if (up == v) continue;
        bool up_in = labels[up] == 0 || labels[up] == i;
        if (!up_in)
          throw std::invalid_argument(
              "A u C_" + std::to_string(i) + " is not upward closed: " +
              point_str(Point{v, dim}) + " is in, " +
              point_str(Point{up, dim}) + " is not");
      }
    }
  }
  Partition p;
  p.dim = dim;
  p.k = k;
  p.labels = std::move(labels);
  return p;
}

Partition partition_from_sets(const PointSet& a,
                              const std::vector<PointSet>& cs) {
  int dim = a.dim();
  int k = static_cast<int>(cs.size());
  std::vector<int> labels(std::size_t{1} << dim, k + 1);
  for (std::uint32_t v = 0; v < labels.size(); ++v)
    if (a.test(v)) labels[v] = 0;
  for (int i = 1; i <= k; ++i) {
    if (cs[i - 1].dim() != dim)
      throw std::invalid_argument("block dimension does not match");
    for (std::uint32_t v = 0; v < labels.size(); ++v) {
      if (!cs[i - 1].test(v)) continue;
      if (labels[v] != k + 1)
        throw std::invalid_argument("blocks overlap at point " +
                                    point_str(Point{v, dim}));
      labels[v] = i;
    }
  }
  return validate_partition(dim, k, std::move(labels));
}

}  // namespace fkglab
