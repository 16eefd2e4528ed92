#include "fkglab/degree_sets.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fkglab/parallel.hpp"
#include "fkglab/rng.hpp"

namespace fkglab {

namespace {

int pair_count(int vertices) { return vertices * (vertices - 1) / 2; }

// incidence[v] = bitmask over edge slots touching v, slots in (u, w)
// lexicographic order with u < w.
std::vector<std::uint32_t> incidence_masks(int vertices) {
  std::vector<std::uint32_t> inc(vertices, 0);
  int slot = 0;
  for (int u = 0; u < vertices; ++u)
    for (int w = u + 1; w < vertices; ++w) {
      inc[u] |= 1u << slot;
      inc[w] |= 1u << slot;
      ++slot;
    }
  return inc;
}

}  // namespace

DegreeSetDistribution exact_degree_distribution(int n, bool force,
                                                int workers) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  int limit = force ? kForcedExactDegreeN : kMaxExactDegreeN;
  if (n > limit)
    throw CapacityError(
        "exact enumeration supports n <= " + std::to_string(limit) +
        (force ? "" : " (n = 4 behind force)") +
        "; use the sampling estimate for larger n");
  int vertices = 2 * n;
  int d = pair_count(vertices);
  auto inc = incidence_masks(vertices);
  workers = resolve_workers(workers);
  using Counts = std::vector<std::uint64_t>;
  auto parts = run_partitioned<Counts>(
      0, std::uint64_t{1} << d, workers,
      [&](int, std::uint64_t lo, std::uint64_t hi) {
        Counts c(vertices + 1, 0);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          int big = 0;
          for (int v = 0; v < vertices; ++v)
            if (__builtin_popcount(static_cast<std::uint32_t>(mask) &
                                   inc[v]) >= n)
              ++big;
          ++c[big];
        }
        return c;
      });
  DegreeSetDistribution dist;
  dist.n = n;
  dist.probs.assign(vertices + 1, Rat(0));
  Rat denom = Rat(Int(1) << d);
  for (const auto& part : parts)
    for (int j = 0; j <= vertices; ++j)
      dist.probs[j] += Rat(static_cast<unsigned long>(part[j]));
  for (auto& p : dist.probs) {
    p /= denom;
    p.canonicalize();
  }
  return dist;
}

InequalityReport check_degree_corollary(const DegreeSetDistribution& d,
                                        int k) {
  int vertices = 2 * d.n;
  if (k < 0 || k > vertices)
    throw std::invalid_argument("k out of range");
  Rat above = 0, below = 0;
  for (int j = 0; j <= vertices; ++j) {
    if (j > k) above += d.probs[j];
    if (j < k) below += d.probs[j];
  }
  Int c = binom(vertices, k);
  Rat prefactor(c - 1, 2 * c);
  prefactor.canonicalize();
  InequalityReport r;
  r.lhs = above * below;
  r.rhs = prefactor * d.probs[k] * d.probs[k];
  r.margin = r.lhs - r.rhs;
  r.holds = r.margin >= 0;
  return r;
}

CentralBoundReport check_central_bound(const DegreeSetDistribution& d) {
  int vertices = 2 * d.n;
  Rat above = 0;
  for (int j = d.n + 1; j <= vertices; ++j) above += d.probs[j];
  Int c = binom(vertices, d.n);
  Int pairs = c * (c - 1) / 2;
  CentralBoundReport r;
  r.lhs_sq = d.probs[d.n] * d.probs[d.n] * Rat(pairs);
  r.rhs_sq = above * above * Rat(c * c);
  r.holds = r.lhs_sq <= r.rhs_sq;
  double cd = mpz_get_d(c.get_mpz_t());
  double pd = mpz_get_d(pairs.get_mpz_t());
  r.cap = cd / (cd + 2 * std::sqrt(pd));
  r.limit = std::sqrt(2.0) - 1;
  return r;
}

McDegreeEstimate mc_degree_distribution(int n, std::uint64_t samples,
                                        std::uint64_t seed, int workers) {
  if (n < 1 || n > 1000) throw std::invalid_argument("n out of range");
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  int vertices = 2 * n;
  int d = pair_count(vertices);
  int words = (d + 63) / 64;
  std::vector<std::vector<std::uint64_t>> inc(
      vertices, std::vector<std::uint64_t>(words, 0));
  int slot = 0;
  for (int u = 0; u < vertices; ++u)
    for (int w = u + 1; w < vertices; ++w) {
      inc[u][slot >> 6] |= std::uint64_t{1} << (slot & 63);
      inc[w][slot >> 6] |= std::uint64_t{1} << (slot & 63);
      ++slot;
    }
  std::uint64_t tail_mask =
      (d & 63) ? (std::uint64_t{1} << (d & 63)) - 1 : ~std::uint64_t{0};
  workers = resolve_workers(workers);
  using Counts = std::vector<std::uint64_t>;
  auto parts = run_partitioned<Counts>(
      0, samples, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        Counts c(vertices + 1, 0);
        Rng rng(worker_seed(seed, w));
        std::vector<std::uint64_t> mask(words);
        for (std::uint64_t s = lo; s < hi; ++s) {
          for (int i = 0; i < words; ++i) mask[i] = rng.u64();
          mask[words - 1] &= tail_mask;
          int big = 0;
          for (int v = 0; v < vertices; ++v) {
            int deg = 0;
            for (int i = 0; i < words; ++i)
              deg += __builtin_popcountll(mask[i] & inc[v][i]);
            if (deg >= n) ++big;
          }
          ++c[big];
        }
        return c;
      });
  McDegreeEstimate est;
  est.n = n;
  est.freq.assign(vertices + 1, 0.0);
  for (const auto& part : parts)
    for (int j = 0; j <= vertices; ++j)
      est.freq[j] += static_cast<double>(part[j]);
  for (auto& f : est.freq) f /= static_cast<double>(samples);
  est.half_width = hoeffding_half_width(samples);
  est.samples = samples;
  return est;
}

}  // namespace fkglab
