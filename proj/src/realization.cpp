#include "fkglab/realization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fkglab/parallel.hpp"

namespace fkglab {

namespace {

struct CoordChain {
  std::vector<Rat> sorted_ts;            // distinct thresholds, ascending
  std::vector<int> level_of_prefix;      // prefix -> index into sorted_ts
  int base = 0;                          // first source index of the chain
};

}  // namespace

Realization realize(const Measure& mu) {
  if (auto viol = check_fkg_property(mu))
    throw std::invalid_argument(
        "measure fails the lattice condition at pair " + point_str(viol->a) +
        ", " + point_str(viol->b));
  if (!mu.full_support())
    throw std::invalid_argument("measure must have full support");

  int n = mu.dim();
  Realization r;
  std::vector<CoordChain> chains(n);

  for (int c = 0; c < n; ++c) {
    std::uint32_t prefixes = 1u << c;
    std::vector<Rat> t(prefixes);
    for (std::uint32_t u = 0; u < prefixes; ++u)
      t[u] = conditional_zero_prob(mu, c, u);

    // Thresholds fall as the prefix grows; covering pairs suffice.
    for (std::uint32_t u = 0; u < prefixes; ++u)
      for (int b = 0; b < c; ++b) {
        std::uint32_t w = u | (1u << b);
        if (w != u && t[u] < t[w])
          throw std::invalid_argument(
              "conditional thresholds are not monotone");
      }

    CoordChain& ch = chains[c];
    std::map<Rat, std::uint32_t> first_prefix;
    for (std::uint32_t u = 0; u < prefixes; ++u)
      first_prefix.emplace(t[u], u);
    for (const auto& [value, u] : first_prefix) ch.sorted_ts.push_back(value);

    ch.level_of_prefix.assign(prefixes, 0);
    for (std::uint32_t u = 0; u < prefixes; ++u)
      ch.level_of_prefix[u] = static_cast<int>(
          std::lower_bound(ch.sorted_ts.begin(), ch.sorted_ts.end(), t[u]) -
          ch.sorted_ts.begin());

    ch.base = r.source_count();
    Rat prev(0);
    for (const auto& tv : ch.sorted_ts) {
      r.sources.push_back((1 - tv) / (1 - prev));
      std::uint32_t u = first_prefix.at(tv);
      r.names.push_back("(" + std::to_string(c + 1) + ", " +
                        point_str(Point{u, c}) + ")");
      prev = tv;
    }
  }

  if (r.source_count() > kMaxSources)
    throw CapacityError("realization needs " +
                        std::to_string(r.source_count()) +
                        " sources, limit is " + std::to_string(kMaxSources));

  // Output c is 1 exactly when the first level_of_prefix(realized prefix) + 1
  // sources of its chain all fire.
  int m = r.source_count();
  r.outputs.assign(n, TruthTable(m));
  for (std::uint32_t a = 0; a < (1u << m); ++a) {
    std::uint32_t v = 0;
    for (int c = 0; c < n; ++c) {
      const CoordChain& ch = chains[c];
      int level = ch.level_of_prefix[v & ((1u << c) - 1)];
      std::uint32_t need =
          ((1u << (level + 1)) - 1) << ch.base;  // sources base..base+level
      if ((a & need) == need) {
        v |= 1u << c;
        r.outputs[c].set(a, true);
      }
    }
  }
  return r;
}

namespace {

Rat assignment_range_mass(const Realization& r, std::vector<Rat>& out,
                          std::uint64_t lo, std::uint64_t hi) {
  int m = r.source_count();
  int n = r.output_count();
  // Odometer over assignments in [lo, hi): partial[j] multiplies the factors
  // of sources j..m-1, so partial[0] is the probability of the assignment.
  std::vector<Rat> one_minus(m);
  for (int j = 0; j < m; ++j) one_minus[j] = 1 - r.sources[j];
  std::vector<Rat> partial(m + 1);
  partial[m] = 1;
  auto refill = [&](std::uint64_t a, int from) {
    for (int j = from; j >= 0; --j)
      partial[j] =
          partial[j + 1] * (((a >> j) & 1u) ? r.sources[j] : one_minus[j]);
  };
  refill(lo, m - 1);
  Rat total = 0;
  for (std::uint64_t a = lo; a < hi; ++a) {
    if (a != lo) {
      // Incrementing a-1 to a rewrites bits 0..ctz(a) and nothing above.
      refill(a, __builtin_ctzll(a));
    }
    std::uint32_t v = 0;
    for (int c = 0; c < n; ++c)
      if (r.outputs[c].test(static_cast<std::uint32_t>(a))) v |= 1u << c;
    out[v] += partial[0];
    total += partial[0];
  }
  return total;
}

void check_realization_shape(const Realization& r) {
  int m = r.source_count();
  if (m > kMaxSources)
    throw CapacityError("realization has " + std::to_string(m) +
                        " sources, limit is " + std::to_string(kMaxSources));
  for (const auto& p : r.sources)
    if (p < 0 || p > 1)
      throw std::invalid_argument("source probability " + rat_str(p) +
                                  " outside [0, 1]");
  for (const auto& tab : r.outputs)
    if (tab.m != m)
      throw std::invalid_argument("truth table arity does not match sources");
}

}  // namespace

Measure pushforward(const Realization& r, int workers) {
  check_realization_shape(r);
  int m = r.source_count();
  int n = r.output_count();
  workers = resolve_workers(workers);
  auto parts = run_partitioned<std::vector<Rat>>(
      0, std::uint64_t{1} << m, workers,
      [&](int, std::uint64_t lo, std::uint64_t hi) {
        std::vector<Rat> w(std::size_t{1} << n, Rat(0));
        assignment_range_mass(r, w, lo, hi);
        return w;
      });
  std::vector<Rat> w(std::size_t{1} << n, Rat(0));
  for (const auto& part : parts)
    for (std::size_t v = 0; v < w.size(); ++v) w[v] += part[v];
  return Measure(n, std::move(w));
}

RealizationVerdict verify_realization(const Realization& r, const Measure& mu,
                                      int workers) {
  check_realization_shape(r);
  RealizationVerdict verdict;
  int m = r.source_count();
  for (int c = 0; c < r.output_count(); ++c) {
    const TruthTable& tab = r.outputs[c];
    for (std::uint32_t a = 0; a < (1u << m); ++a) {
      for (int j = 0; j < m; ++j) {
        std::uint32_t up = a | (1u << j);
        if (up != a && tab.test(a) && !tab.test(up)) {
          verdict.detail = "output " + std::to_string(c + 1) +
                           " is not monotone: assignment " +
                           point_str(Point{a, m}) + " beats source " +
                           std::to_string(j + 1);
          return verdict;
        }
      }
    }
  }
  if (r.output_count() != mu.dim()) {
    verdict.detail = "output count does not match measure dimension";
    return verdict;
  }
  Measure push = pushforward(r, workers);
  for (std::uint32_t v = 0; v < mu.size(); ++v) {
    if (push.at(v) != mu.at(v)) {
      verdict.detail = "pushforward differs at " +
                       point_str(Point{v, mu.dim()}) + ": got " +
                       rat_str(push.at(v)) + ", want " + rat_str(mu.at(v));
      return verdict;
    }
  }
  verdict.ok = true;
  return verdict;
}

}  // namespace fkglab
