#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "fkglab/measure.hpp"
#include "fkglab/partition.hpp"
#include "fkglab/rational.hpp"
#include "fkglab/strong.hpp"

namespace fkglab {

inline constexpr int kMaxExactEdges = 26;
inline constexpr int kMaxEmbedEdges = 20;

struct Edge {
  int u = 0;
  int v = 0;
  Rat p;
};

struct EdgeGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

// Validates endpoints, duplicate pairs and probability ranges.
EdgeGraph make_graph(int vertex_count, std::vector<Edge> edges);

// Connectivity pattern of three marked vertices in the open subgraph.
struct TriplePartitionProbs {
  Rat p123;    // all three connected
  Rat p12_3;   // 1 and 2 connected, 3 apart
  Rat p13_2;
  Rat p1_23;
  Rat p1_2_3;  // pairwise disconnected
};

// Exact enumeration over all 2^|E| subgraphs; |E| <= kMaxExactEdges.
TriplePartitionProbs exact_triple_probs(const EdgeGraph& g,
                                        std::array<int, 3> t, int workers = 1);

// lhs = P(123) P(1|2|3), rhs = e2(P(12|3), P(13|2), P(1|23)).
InequalityReport check_percolation_inequality(const TriplePartitionProbs& pr);

struct McTripleEstimate {
  std::array<double, 5> freq;  // same order as TriplePartitionProbs
  double half_width;           // 99% Hoeffding, sqrt(ln(200) / (2 samples))
  std::uint64_t samples = 0;
};

McTripleEstimate mc_triple_probs(const EdgeGraph& g, std::array<int, 3> t,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int workers = 1);

// Product measure on {0,1}^|E| (one coordinate per edge) together with the
// partition whose blocks are the five connectivity patterns:
// A = all connected, C_1 = (1|23), C_2 = (13|2), C_3 = (12|3), B = rest.
// |E| <= kMaxEmbedEdges.
std::pair<Measure, Partition> percolation_to_partition(const EdgeGraph& g,
                                                       std::array<int, 3> t);

}  // namespace fkglab
