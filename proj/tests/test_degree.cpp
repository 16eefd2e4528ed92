#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fkglab/degree_sets.hpp"
#include "fkglab/rng.hpp"

using namespace fkglab;

namespace {

Rat R(const char* s) { return parse_rat(s); }

}  // namespace

TEST_CASE("two vertex graphs split between empty and full") {
  DegreeSetDistribution d = exact_degree_distribution(1);
  REQUIRE(d.probs.size() == 3);
  CHECK(d.probs[0] == R("1/2"));
  CHECK(d.probs[1] == 0);
  CHECK(d.probs[2] == R("1/2"));
}

TEST_CASE("four vertex distribution matches the frozen table") {
  DegreeSetDistribution d = exact_degree_distribution(2);
  REQUIRE(d.probs.size() == 5);
  CHECK(d.probs[0] == R("5/32"));
  CHECK(d.probs[1] == R("1/4"));
  CHECK(d.probs[2] == R("3/16"));
  CHECK(d.probs[3] == R("1/4"));
  CHECK(d.probs[4] == R("5/32"));
}

TEST_CASE("six vertex distribution matches the frozen table") {
  DegreeSetDistribution d = exact_degree_distribution(3);
  REQUIRE(d.probs.size() == 7);
  CHECK(d.probs[0] == R("929/16384"));
  CHECK(d.probs[1] == R("291/2048"));
  CHECK(d.probs[2] == R("3255/16384"));
  CHECK(d.probs[3] == R("105/512"));
  CHECK(d.probs[4] == R("3255/16384"));
  CHECK(d.probs[5] == R("291/2048"));
  CHECK(d.probs[6] == R("929/16384"));
}

TEST_CASE("distributions are symmetric under graph complementation") {
  for (int n = 1; n <= 3; ++n) {
    DegreeSetDistribution d = exact_degree_distribution(n);
    Rat total = 0;
    for (int j = 0; j <= 2 * n; ++j) {
      CHECK(d.probs[j] == d.probs[2 * n - j]);
      total += d.probs[j];
    }
    CHECK(total == 1);
  }
}

TEST_CASE("one below full occupation stays reachable beyond the segment") {
  CHECK(exact_degree_distribution(1).probs[1] == 0);
  CHECK(exact_degree_distribution(2).probs[3] == R("1/4"));
  CHECK(exact_degree_distribution(3).probs[5] == R("291/2048"));
}

TEST_CASE("tail product bound holds for every threshold") {
  for (int n = 1; n <= 3; ++n) {
    DegreeSetDistribution d = exact_degree_distribution(n);
    for (int k = 0; k <= 2 * n; ++k) {
      InequalityReport r = check_degree_corollary(d, k);
      CHECK(r.holds);
      CHECK(r.margin == r.lhs - r.rhs);
    }
  }
  CHECK_THROWS_AS(
      check_degree_corollary(exact_degree_distribution(1), 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_degree_corollary(exact_degree_distribution(1), -1),
      std::invalid_argument);
}

TEST_CASE("tail product bound on the segment in closed form") {
  DegreeSetDistribution d = exact_degree_distribution(1);
  InequalityReport r = check_degree_corollary(d, 1);
  CHECK(r.lhs == R("1/4"));
  CHECK(r.rhs == 0);
  CHECK(r.holds);

  InequalityReport r0 = check_degree_corollary(d, 0);
  CHECK(r0.lhs == 0);
  CHECK(r0.rhs == 0);
  CHECK(r0.holds);
}

TEST_CASE("apex prefactor dominates the balanced split prefactor") {
  for (int v : {2, 4, 6}) {
    for (int k = 0; k <= v; ++k) {
      Int c = binom(v, k);
      if (c < 2) continue;
      Rat apex(c - 1, 2 * c);
      apex.canonicalize();
      Int floor_half = c / 2;
      Int ceil_half = c - floor_half;
      Rat balanced(floor_half * ceil_half, c * c);
      balanced.canonicalize();
      CHECK(apex >= balanced);
    }
  }
}

TEST_CASE("central bound holds with room for n up to three") {
  for (int n = 1; n <= 3; ++n) {
    DegreeSetDistribution d = exact_degree_distribution(n);
    CentralBoundReport r = check_central_bound(d);
    CHECK(r.holds);
    CHECK(r.lhs_sq <= r.rhs_sq);
    CHECK(r.limit == doctest::Approx(std::sqrt(2.0) - 1));
  }
  CHECK(check_central_bound(exact_degree_distribution(2)).cap ==
        doctest::Approx(6.0 / (6.0 + 2.0 * std::sqrt(15.0))));
  CHECK(check_central_bound(exact_degree_distribution(3)).cap ==
        doctest::Approx(20.0 / (20.0 + 2.0 * std::sqrt(190.0))));
}

TEST_CASE("exact enumeration capacity is gated") {
  CHECK_THROWS_AS(exact_degree_distribution(4), CapacityError);
  CHECK_THROWS_AS(exact_degree_distribution(5, true), CapacityError);
  CHECK_THROWS_AS(exact_degree_distribution(0), std::invalid_argument);
}

TEST_CASE("worker splits do not change the exact distribution") {
  DegreeSetDistribution a = exact_degree_distribution(3, false, 1);
  DegreeSetDistribution b = exact_degree_distribution(3, false, 4);
  for (int j = 0; j <= 6; ++j) CHECK(a.probs[j] == b.probs[j]);
}

TEST_CASE("sampled distribution tracks the exact one") {
  DegreeSetDistribution d = exact_degree_distribution(2);
  McDegreeEstimate est = mc_degree_distribution(2, 100000, 99);
  REQUIRE(est.freq.size() == 5);
  CHECK(est.samples == 100000);
  double total = 0;
  for (int j = 0; j <= 4; ++j) {
    CHECK(std::abs(est.freq[j] - rat_double(d.probs[j])) <= est.half_width);
    total += est.freq[j];
  }
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("sampling is reproducible and reacts to the seed") {
  McDegreeEstimate a = mc_degree_distribution(3, 20000, 5);
  McDegreeEstimate b = mc_degree_distribution(3, 20000, 5);
  CHECK(a.freq == b.freq);
  McDegreeEstimate c = mc_degree_distribution(3, 20000, 6);
  CHECK(a.freq != c.freq);

  McDegreeEstimate one = mc_degree_distribution(1, 1, 0);
  double sum = 0;
  for (double f : one.freq) sum += f;
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("sampling works beyond the exact capacity") {
  McDegreeEstimate est = mc_degree_distribution(5, 2000, 17);
  REQUIRE(est.freq.size() == 11);
  double total = 0;
  for (double f : est.freq) total += f;
  CHECK(total == doctest::Approx(1.0));
}
