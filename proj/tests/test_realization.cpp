#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkglab/gen.hpp"
#include "fkglab/realization.hpp"
#include "fkglab/strong.hpp"

using namespace fkglab;

namespace {

Rat R(const char* s) { return parse_rat(s); }

template <typename E, typename Fn>
bool throws_containing(Fn&& fn, const std::string& needle) {
  try {
    fn();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

Measure ising2() {
  std::vector<std::vector<Rat>> b{{R("1"), R("2")}, {R("2"), R("1")}};
  return ising_measure(b, {R("1"), R("1")});
}

}  // namespace

TEST_CASE("product measures compile to one source per coordinate") {
  Measure mu = product_measure({R("1/3"), R("3/4")});
  Realization r = realize(mu);
  REQUIRE(r.source_count() == 2);
  CHECK(r.sources[0] == R("1/3"));
  CHECK(r.sources[1] == R("3/4"));
  for (std::uint32_t a = 0; a < 4; ++a) {
    CHECK(r.outputs[0].test(a) == ((a & 1u) != 0));
    CHECK(r.outputs[1].test(a) == ((a & 2u) != 0));
  }
  CHECK(verify_realization(r, mu).ok);
}

TEST_CASE("pair coupling example compiles to the known chain") {
  Measure mu = ising2();
  Realization r = realize(mu);
  REQUIRE(r.source_count() == 3);
  CHECK(r.sources[0] == R("3/5"));
  CHECK(r.sources[1] == R("2/3"));
  CHECK(r.sources[2] == R("3/4"));
  REQUIRE(r.names.size() == 3);
  CHECK(r.names[0] == "(1, )");
  CHECK(r.names[1] == "(2, 1)");
  CHECK(r.names[2] == "(2, 0)");
  RealizationVerdict v = verify_realization(r, mu);
  CHECK(v.ok);
  CHECK(pushforward(r) == mu);
}

TEST_CASE("uniform cube is its own realization") {
  Measure mu = product_measure({R("1/2"), R("1/2"), R("1/2")});
  Realization r = realize(mu);
  REQUIRE(r.source_count() == 3);
  for (const auto& p : r.sources) CHECK(p == R("1/2"));
  CHECK(verify_realization(r, mu).ok);
}

TEST_CASE("chain prefix products recover the thresholds") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.range(1, 3);
    Measure mu = random_ising_measure(rng, n);
    Realization r = realize(mu);
    int j = 0;
    for (int c = 0; c < n; ++c) {
      Rat running(1);
      std::string prefix_tag = "(" + std::to_string(c + 1) + ",";
      Rat prev(0);
      while (j < r.source_count() &&
             r.names[j].rfind(prefix_tag, 0) == 0) {
        running *= r.sources[j];
        // The chain probability of level j is 1 - t_(j).
        Rat level = 1 - running;
        CHECK(level >= prev);
        CHECK(level >= 0);
        CHECK(level < 1);
        prev = level;
        ++j;
      }
    }
    CHECK(j == r.source_count());
  }
}

TEST_CASE("source count stays within the per coordinate bound") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.range(1, 3);
    Measure mu = random_ising_measure(rng, n);
    Realization r = realize(mu);
    CHECK(r.source_count() >= n);
    CHECK(r.source_count() <= n * (1 << (n - 1)));
    CHECK(r.output_count() == n);
  }
}

TEST_CASE("random full support measures round trip exactly") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(1, 3);
    Measure mu = random_ising_measure(rng, n);
    Realization r = realize(mu);
    RealizationVerdict v = verify_realization(r, mu);
    CHECK(v.ok);
    CHECK(v.detail.empty());
  }
}

TEST_CASE("realize rejects unsupported measures") {
  CHECK(throws_containing<std::invalid_argument>(
      [&] { realize(fixed_point_measure(3)); }, "lattice"));
  CHECK(throws_containing<std::invalid_argument>(
      [&] { realize(product_measure({R("1"), R("1/2")})); }, "support"));
}

TEST_CASE("pushforward handles explicit circuits") {
  // Two sources, outputs both equal to the top assignment conjunction.
  Realization r;
  r.sources = {R("1/2"), R("1/3")};
  TruthTable both(2);
  both.set(3, true);
  r.outputs = {both, both};
  Measure mu = pushforward(r);
  CHECK(mu.at(3) == R("1/6"));
  CHECK(mu.at(0) == R("5/6"));
  CHECK(mu.at(1) == 0);
  CHECK(mu.at(2) == 0);

  // Constant outputs give a point mass.
  Realization c;
  c.sources = {R("2/7")};
  TruthTable ones(1);
  ones.set(0, true);
  ones.set(1, true);
  c.outputs = {ones};
  Measure point = pushforward(c);
  CHECK(point.at(1) == 1);

  // No outputs at all: the unique point of the 0-cube has mass 1.
  Realization empty;
  empty.sources = {R("1/2")};
  Measure trivial = pushforward(empty);
  CHECK(trivial.dim() == 0);
  CHECK(trivial.at(0) == 1);
}

TEST_CASE("pushforward is stable under worker splits") {
  Rng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    Realization r = random_realization(rng, 5, 3);
    CHECK(pushforward(r, 1) == pushforward(r, 4));
  }
}

TEST_CASE("verification reports broken monotonicity with a witness") {
  Measure mu = product_measure({R("1/2"), R("1/2")});
  Realization r = realize(mu);
  // Clearing the top assignment of output 1 breaks monotonicity.
  r.outputs[0].set(3, false);
  RealizationVerdict v = verify_realization(r, mu);
  CHECK(!v.ok);
  CHECK(v.detail.find("monotone") != std::string::npos);
  CHECK(v.detail.find("output 1") != std::string::npos);
}

TEST_CASE("verification reports pushforward mismatches") {
  Measure mu = ising2();
  Realization r = realize(mu);
  Measure other = product_measure({R("1/2"), R("1/2")});
  RealizationVerdict v = verify_realization(r, other);
  CHECK(!v.ok);
  CHECK(v.detail.find("pushforward differs") != std::string::npos);

  Realization wrong_arity = r;
  wrong_arity.outputs.pop_back();
  RealizationVerdict va = verify_realization(wrong_arity, mu);
  CHECK(!va.ok);
}

TEST_CASE("source capacity is enforced") {
  Realization big;
  big.sources.assign(kMaxSources + 1, R("1/2"));
  big.outputs.assign(1, TruthTable(kMaxSources + 1));
  CHECK_THROWS_AS(pushforward(big), CapacityError);
  CHECK_THROWS_AS(verify_realization(big, product_measure({R("1/2")})),
                  CapacityError);
}

TEST_CASE("monotone circuit outputs satisfy the strong inequality") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    int m = rng.range(1, 4);
    int n = rng.range(1, 3);
    Realization r = random_realization(rng, m, n);
    Measure mu = pushforward(r);
    for (const auto& p : enumerate_valid_partitions(n))
      CHECK(check_strong_inequality(mu, p).holds);
  }
}
