#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fkglab {

struct SuiteSection {
  std::string name;
  std::uint64_t trials = 0;
  bool ok = false;
  std::string detail;  // empty when ok
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  int workers = 1;
};

// Randomized property battery shared by the command line driver and the
// acceptance harness. Sections, in order:
//   pair-product      k = 2 margin equals the correlation gap
//   strong-random     random product measures, random partitions
//   strong-realized   pushforwards of random monotone circuits,
//                     all partitions of small cubes
//   roundtrip         realize then verify on random full-support measures
//   induction         trace obligations on random product measures
//   percolation       triple inequality on random graphs, with embedding
//                     cross-checks on a subsample
std::vector<SuiteSection> run_suite(const SuiteOptions& opt);

// Individual sections; trial counts are chosen by the caller.
SuiteSection suite_pair_product(std::uint64_t seed, std::uint64_t trials);
SuiteSection suite_strong_random(std::uint64_t seed, std::uint64_t trials);
SuiteSection suite_strong_realized(std::uint64_t seed, std::uint64_t trials);
SuiteSection suite_roundtrip(std::uint64_t seed, std::uint64_t trials);
SuiteSection suite_induction(std::uint64_t seed, std::uint64_t trials);
SuiteSection suite_percolation(std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t cross_checks, int workers);

}  // namespace fkglab
