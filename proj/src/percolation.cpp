#include "fkglab/percolation.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "fkglab/parallel.hpp"
#include "fkglab/rng.hpp"

namespace fkglab {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Index into the five-pattern order used throughout:
// 0 = 123, 1 = 12|3, 2 = 13|2, 3 = 1|23, 4 = 1|2|3.
int classify(UnionFind& uf, const std::array<int, 3>& t) {
  int r1 = uf.find(t[0]), r2 = uf.find(t[1]), r3 = uf.find(t[2]);
  if (r1 == r2 && r2 == r3) return 0;
  if (r1 == r2) return 1;
  if (r1 == r3) return 2;
  if (r2 == r3) return 3;
  return 4;
}

void check_triple(const EdgeGraph& g, const std::array<int, 3>& t) {
  for (int i = 0; i < 3; ++i) {
    if (t[i] < 0 || t[i] >= g.vertex_count)
      throw std::invalid_argument("marked vertex out of range: " +
                                  std::to_string(t[i]));
    for (int j = i + 1; j < 3; ++j)
      if (t[i] == t[j])
        throw std::invalid_argument("marked vertices must be distinct");
  }
}

}  // namespace

EdgeGraph make_graph(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1)
    throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= vertex_count || e.u == e.v)
      throw std::invalid_argument("bad edge endpoints " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    if (e.p < 0 || e.p > 1)
      throw std::invalid_argument("edge probability " + rat_str(e.p) +
                                  " outside [0, 1]");
  }
  return EdgeGraph{vertex_count, std::move(edges)};
}

TriplePartitionProbs exact_triple_probs(const EdgeGraph& g,
                                        std::array<int, 3> t, int workers) {
  check_triple(g, t);
  int m = static_cast<int>(g.edges.size());
  if (m > kMaxExactEdges)
    throw CapacityError("exact enumeration supports at most " +
                        std::to_string(kMaxExactEdges) + " edges, got " +
                        std::to_string(m));
  workers = resolve_workers(workers);
  using Acc = std::array<Rat, 5>;
  auto parts = run_partitioned<Acc>(
      0, std::uint64_t{1} << m, workers,
      [&](int, std::uint64_t lo, std::uint64_t hi) {
        Acc acc{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          Rat w(1);
          UnionFind uf(g.vertex_count);
          for (int e = 0; e < m; ++e) {
            if ((mask >> e) & 1u) {
              w *= g.edges[e].p;
              uf.unite(g.edges[e].u, g.edges[e].v);
            } else {
              w *= 1 - g.edges[e].p;
            }
          }
          acc[classify(uf, t)] += w;
        }
        return acc;
      });
  Acc total{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  for (const auto& part : parts)
    for (int i = 0; i < 5; ++i) total[i] += part[i];
  return TriplePartitionProbs{total[0], total[1], total[2], total[3],
                              total[4]};
}

InequalityReport check_percolation_inequality(
    const TriplePartitionProbs& pr) {
  InequalityReport r;
  r.lhs = pr.p123 * pr.p1_2_3;
  r.rhs = e2({pr.p12_3, pr.p13_2, pr.p1_23});
  r.margin = r.lhs - r.rhs;
  r.holds = r.margin >= 0;
  return r;
}

McTripleEstimate mc_triple_probs(const EdgeGraph& g, std::array<int, 3> t,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int workers) {
  check_triple(g, t);
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  int m = static_cast<int>(g.edges.size());
  std::vector<BernoulliThreshold> thr(m);
  for (int e = 0; e < m; ++e) thr[e] = bernoulli_threshold(g.edges[e].p);
  workers = resolve_workers(workers);
  using Counts = std::array<std::uint64_t, 5>;
  auto parts = run_partitioned<Counts>(
      0, samples, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        Counts c{0, 0, 0, 0, 0};
        Rng rng(worker_seed(seed, w));
        for (std::uint64_t s = lo; s < hi; ++s) {
          UnionFind uf(g.vertex_count);
          for (int e = 0; e < m; ++e)
            if (bernoulli_hit(thr[e], rng.u64()))
              uf.unite(g.edges[e].u, g.edges[e].v);
          ++c[classify(uf, t)];
        }
        return c;
      });
  Counts total{0, 0, 0, 0, 0};
  for (const auto& part : parts)
    for (int i = 0; i < 5; ++i) total[i] += part[i];
  McTripleEstimate est;
  for (int i = 0; i < 5; ++i)
    est.freq[i] = static_cast<double>(total[i]) / samples;
  est.half_width = hoeffding_half_width(samples);
  est.samples = samples;
  return est;
}

std::pair<Measure, Partition> percolation_to_partition(const EdgeGraph& g,
                                                       std::array<int, 3> t) {
  check_triple(g, t);
  int m = static_cast<int>(g.edges.size());
  if (m > kMaxEmbedEdges)
    throw CapacityError("partition embedding supports at most " +
                        std::to_string(kMaxEmbedEdges) + " edges, got " +
                        std::to_string(m));
  std::vector<Rat> p(m);
  for (int e = 0; e < m; ++e) p[e] = g.edges[e].p;
  Measure mu = product_measure(p);

  std::vector<int> labels(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1u) uf.unite(g.edges[e].u, g.edges[e].v);
    switch (classify(uf, t)) {
      case 0: labels[mask] = 0; break;   // A: all three connected
      case 3: labels[mask] = 1; break;   // C_1 = 1|23
      case 2: labels[mask] = 2; break;   // C_2 = 13|2
      case 1: labels[mask] = 3; break;   // C_3 = 12|3
      default: labels[mask] = 4; break;  // B: pairwise apart
    }
  }
  return {std::move(mu), validate_partition(m, 3, std::move(labels))};
}

}  // namespace fkglab
