#pragma once

#include <cstdint>
#include <vector>

#include "fkglab/rational.hpp"
#include "fkglab/strong.hpp"

namespace fkglab {

inline constexpr int kMaxExactDegreeN = 3;
inline constexpr int kForcedExactDegreeN = 4;

// Distribution of |S| where S is the set of vertices of degree >= n in a
// uniformly random graph on 2n vertices. probs[j] = P(|S| = j).
struct DegreeSetDistribution {
  int n = 0;
  std::vector<Rat> probs;
};

// Exact enumeration over all 2^C(2n,2) graphs. n <= 3, or 4 with force.
DegreeSetDistribution exact_degree_distribution(int n, bool force = false,
                                                int workers = 1);

// Tail product against the apex term:
// lhs = P(|S| > k) P(|S| < k), rhs = (C-1)/(2C) P(|S| = k)^2, C = binom(2n,k).
InequalityReport check_degree_corollary(const DegreeSetDistribution& d, int k);

struct CentralBoundReport {
  bool holds = false;
  Rat lhs_sq;     // P(|S| = n)^2 * binom(C, 2)
  Rat rhs_sq;     // P(|S| > n)^2 * C^2
  double cap;     // C / (C + 2 sqrt(binom(C, 2)))
  double limit;   // sqrt(2) - 1
};

// P(|S| = n) <= cap * P(|S| > n) with C = binom(2n, n), compared in squares.
CentralBoundReport check_central_bound(const DegreeSetDistribution& d);

struct McDegreeEstimate {
  int n = 0;
  std::vector<double> freq;
  double half_width;
  std::uint64_t samples = 0;
};

McDegreeEstimate mc_degree_distribution(int n, std::uint64_t samples,
                                        std::uint64_t seed, int workers = 1);

}  // namespace fkglab
