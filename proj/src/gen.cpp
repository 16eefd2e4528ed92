#include "fkglab/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fkglab/parallel.hpp"
#include "fkglab/upsets.hpp"

namespace fkglab {

int resolve_workers(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("FKGLAB_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 1;
}

BernoulliThreshold bernoulli_threshold(const Rat& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("probability " + rat_str(p) +
                                " outside [0, 1]");
  BernoulliThreshold t;
  if (p == 1) {
    t.always = true;
    return t;
  }
  Int scaled = (p.get_num() << 64) / p.get_den();
  t.threshold = scaled.get_ui();
  return t;
}

double hoeffding_half_width(std::uint64_t samples) {
  return std::sqrt(std::log(200.0) / (2.0 * static_cast<double>(samples)));
}

Rat random_rat01(Rng& rng, int max_den) {
  std::uint64_t den = 1 + rng.below(max_den);
  std::uint64_t num = rng.below(den + 1);
  Rat r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

Rat random_rat_open01(Rng& rng, int max_den) {
  if (max_den < 2) throw std::invalid_argument("max_den must be at least 2");
  std::uint64_t den = 2 + rng.below(max_den - 1);
  std::uint64_t num = 1 + rng.below(den - 1);
  Rat r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

Measure random_product_measure(Rng& rng, int n) {
  std::vector<Rat> p(n);
  for (auto& x : p) x = random_rat01(rng);
  return product_measure(p);
}

Measure random_measure(Rng& rng, int n) {
  std::vector<Rat> w(std::size_t{1} << n);
  Rat total = 0;
  for (auto& x : w) {
    x = Rat(static_cast<unsigned long>(rng.below(8)));
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (auto& x : w) x /= total;
  return Measure(n, std::move(w));
}

Measure random_ising_measure(Rng& rng, int n) {
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, Rat(1)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat v = 1 + random_rat01(rng, 8);
      b[i][j] = v;
      b[j][i] = v;
    }
  std::vector<Rat> c(n);
  for (auto& x : c) x = random_rat_open01(rng, 8) + random_rat01(rng, 8);
  return ising_measure(b, c);
}

TruthTable random_monotone_table(Rng& rng, int m) {
  const auto& ups = cached_upsets(m);
  const PointSet& s = ups[rng.below(ups.size())];
  TruthTable t(m);
  for (std::uint32_t a = 0; a < (1u << m); ++a)
    if (s.test(a)) t.set(a, true);
  return t;
}

Realization random_realization(Rng& rng, int m, int outputs) {
  Realization r;
  for (int j = 0; j < m; ++j) r.sources.push_back(random_rat_open01(rng));
  for (int c = 0; c < outputs; ++c)
    r.outputs.push_back(random_monotone_table(rng, m));
  return r;
}

Partition random_partition(Rng& rng, int n, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const auto& ups = cached_upsets(n);
  const PointSet& a = ups[rng.below(ups.size())];

  std::vector<const PointSet*> candidates;
  for (const auto& v : ups)
    if (a.subset_of(v) && v != a) candidates.push_back(&v);
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng.below(i)]);

  std::vector<PointSet> taken;  // the V_i; C_i = V_i minus A
  for (const auto* cand : candidates) {
    if (static_cast<int>(taken.size()) == k) break;
    bool ok = true;
    for (const auto& v : taken)
      if ((*cand & v) != a) {
        ok = false;
        break;
      }
    if (ok) taken.push_back(*cand);
  }

  std::vector<PointSet> cs;
  PointSet not_a = a.complement();
  for (const auto& v : taken) cs.push_back(v & not_a);
  while (static_cast<int>(cs.size()) < k) cs.push_back(PointSet(n));
  return partition_from_sets(a, cs);
}

namespace {

void families(const std::vector<PointSet>& candidates, std::size_t from,
              const PointSet& a, std::vector<PointSet>& current,
              const PointSet& not_a, std::vector<Partition>& out) {
  {
    std::vector<PointSet> cs;
    for (const auto& v : current) cs.push_back(v & not_a);
    while (cs.size() < 2) cs.push_back(PointSet(a.dim()));
    out.push_back(partition_from_sets(a, cs));
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    bool ok = true;
    for (const auto& v : current)
      if ((candidates[i] & v) != a) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(candidates[i]);
    families(candidates, i + 1, a, current, not_a, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_valid_partitions(int n) {
  std::vector<Partition> out;
  const auto& ups = cached_upsets(n);
  for (const auto& a : ups) {
    std::vector<PointSet> candidates;
    for (const auto& v : ups)
      if (a.subset_of(v) && v != a) candidates.push_back(v);
    std::vector<PointSet> current;
    families(candidates, 0, a, current, a.complement(), out);
  }
  return out;
}

EdgeGraph random_graph(Rng& rng, int max_vertices, int max_edges) {
  int vertices = rng.range(3, std::max(3, max_vertices));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < vertices; ++u)
    for (int w = u + 1; w < vertices; ++w) pairs.push_back({u, w});
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.below(i)]);
  int want = rng.range(1, std::min<int>(max_edges,
                                        static_cast<int>(pairs.size())));
  std::vector<Edge> edges;
  for (int e = 0; e < want; ++e)
    edges.push_back(Edge{pairs[e].first, pairs[e].second,
                         random_rat_open01(rng, 12)});
  return make_graph(vertices, std::move(edges));
}

}  // namespace fkglab
