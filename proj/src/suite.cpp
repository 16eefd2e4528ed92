#include "fkglab/suite.hpp"

#include <string>

#include "fkglab/gen.hpp"
#include "fkglab/io.hpp"
#include "fkglab/strong.hpp"

namespace fkglab {

namespace {

std::string trial_tag(std::uint64_t i) {
  return "trial " + std::to_string(i);
}

}  // namespace

SuiteSection suite_pair_product(std::uint64_t seed, std::uint64_t trials) {
  SuiteSection s{"pair-product", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x70616972ULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    int n = rng.range(1, 4);
    Measure mu = rng.coin() ? random_measure(rng, n)
                            : random_product_measure(rng, n);
    Partition p = random_partition(rng, n, 2);
    auto [margin, gap] = k2_identity_check(mu, p);
    if (margin != gap) {
      s.ok = false;
      s.detail = trial_tag(i) + ": margin " + rat_str(margin) +
                 " differs from correlation gap " + rat_str(gap);
      return s;
    }
  }
  return s;
}

SuiteSection suite_strong_random(std::uint64_t seed, std::uint64_t trials) {
  SuiteSection s{"strong-random", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x7374726fULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    int n = rng.range(1, 5);
    int k = rng.range(2, 5);
    Measure mu = random_product_measure(rng, n);
    Partition p = random_partition(rng, n, k);
    InequalityReport r = check_strong_inequality(mu, p);
    if (!r.holds) {
      s.ok = false;
      s.detail = trial_tag(i) + ": margin " + rat_str(r.margin) +
                 " negative on a product measure";
      return s;
    }
  }
  return s;
}

SuiteSection suite_strong_realized(std::uint64_t seed, std::uint64_t trials) {
  SuiteSection s{"strong-realized", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x7265616cULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    int m = rng.range(1, 4);
    int n = rng.range(1, 3);
    Realization r = random_realization(rng, m, n);
    Measure mu = pushforward(r);
    for (const auto& p : enumerate_valid_partitions(n)) {
      InequalityReport rep = check_strong_inequality(mu, p);
      if (!rep.holds) {
        s.ok = false;
        s.detail = trial_tag(i) + ": margin " + rat_str(rep.margin) +
                   " negative on a realized measure";
        return s;
      }
    }
  }
  return s;
}

SuiteSection suite_roundtrip(std::uint64_t seed, std::uint64_t trials) {
  SuiteSection s{"roundtrip", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x72747269ULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    int n = rng.range(1, 3);
    Measure mu = random_ising_measure(rng, n);
    Realization r = realize(mu);
    RealizationVerdict v = verify_realization(r, mu);
    if (!v.ok) {
      s.ok = false;
      s.detail = trial_tag(i) + ": " + v.detail;
      return s;
    }
    Realization reloaded = realization_from_json(realization_to_json(r));
    RealizationVerdict v2 = verify_realization(reloaded, mu);
    if (!v2.ok) {
      s.ok = false;
      s.detail = trial_tag(i) + " after serialization: " + v2.detail;
      return s;
    }
  }
  return s;
}

SuiteSection suite_induction(std::uint64_t seed, std::uint64_t trials) {
  SuiteSection s{"induction", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x696e6475ULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    int n = rng.range(1, 4);
    int k = rng.range(2, 5);
    Measure mu = random_product_measure(rng, n);
    Partition p = random_partition(rng, n, k);
    InductionTrace t = induction_trace(mu, p);
    InductionVerdict v = verify_induction_step(t);
    if (!v.ok) {
      s.ok = false;
      s.detail = trial_tag(i) + ": obligation " +
                 std::to_string(v.failed_obligation) + " failed: " + v.detail;
      return s;
    }
  }
  return s;
}

SuiteSection suite_percolation(std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t cross_checks, int workers) {
  SuiteSection s{"percolation", trials, true, ""};
  Rng rng(splitmix64(seed ^ 0x70657263ULL));
  for (std::uint64_t i = 0; i < trials; ++i) {
    EdgeGraph g = random_graph(rng, 7, 12);
    std::array<int, 3> t{0, 1, 2};
    TriplePartitionProbs pr = exact_triple_probs(g, t, workers);
    InequalityReport rep = check_percolation_inequality(pr);
    if (!rep.holds) {
      s.ok = false;
      s.detail = trial_tag(i) + ": margin " + rat_str(rep.margin) +
                 " negative on graph\n" + graph_to_text(g);
      return s;
    }
    if (i < cross_checks) {
      auto [mu, p] = percolation_to_partition(g, t);
      InequalityReport emb = check_strong_inequality(mu, p);
      if (emb.lhs != rep.lhs || emb.rhs != rep.rhs) {
        s.ok = false;
        s.detail = trial_tag(i) + ": embedded partition disagrees, " +
                   rat_str(emb.lhs) + "/" + rat_str(emb.rhs) + " vs " +
                   rat_str(rep.lhs) + "/" + rat_str(rep.rhs);
        return s;
      }
    }
  }
  return s;
}

std::vector<SuiteSection> run_suite(const SuiteOptions& opt) {
  std::vector<SuiteSection> out;
  out.push_back(suite_pair_product(opt.seed, opt.trials / 2));
  out.push_back(suite_strong_random(opt.seed, opt.trials));
  out.push_back(suite_strong_realized(opt.seed, opt.trials / 5));
  out.push_back(suite_roundtrip(opt.seed, opt.trials / 20));
  out.push_back(suite_induction(opt.seed, opt.trials / 2));
  out.push_back(suite_percolation(opt.seed, opt.trials,
                                  opt.trials / 10, opt.workers));
  return out;
}

}  // namespace fkglab
