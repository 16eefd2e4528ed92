#pragma once

#include <cstdint>
#include <vector>

#include "fkglab/point.hpp"

namespace fkglab {

// Labelled partition of {0,1}^dim into A, C_1..C_k, B.
// labels[v] = 0 for A, i in 1..k for C_i, k+1 for B.
// Validity: k >= 2 and A u C_i is an upset for every i (so A itself is one).
struct Partition {
  int dim = 0;
  int k = 0;
  std::vector<int> labels;

  bool is_a(std::uint32_t v) const { return labels[v] == 0; }
  bool is_b(std::uint32_t v) const { return labels[v] == k + 1; }
  // 1..k when v lies in some C_i, otherwise 0.
  int c_index(std::uint32_t v) const {
    int l = labels[v];
    return (l >= 1 && l <= k) ? l : 0;
  }

  PointSet a_set() const;
  PointSet b_set() const;
  PointSet c_set(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws std::invalid_argument with a witness when some A u C_i is not
// upward closed, when a label is out of range, or when k < 2.
Partition validate_partition(int dim, int k, std::vector<int> labels);

// Builds labels from explicit blocks; every point outside A and the C_i
// becomes B. Blocks must be pairwise disjoint.
Partition partition_from_sets(const PointSet& a,
                              const std::vector<PointSet>& cs);

}  // namespace fkglab
