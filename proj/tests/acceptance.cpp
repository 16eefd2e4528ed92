// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Every expected value and tolerance is pinned here, not computed on the fly.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fkglab/degree_sets.hpp"
#include "fkglab/gen.hpp"
#include "fkglab/io.hpp"
#include "fkglab/percolation.hpp"
#include "fkglab/realization.hpp"
#include "fkglab/strong.hpp"
#include "fkglab/suite.hpp"
#include "fkglab/upsets.hpp"

using namespace fkglab;

namespace {

Rat R(const char* s) { return parse_rat(s); }

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

Partition mu3_partition() {
  PointSet a(3);
  for (const char* s : {"110", "101", "011", "111"}) a.insert(parse_point(s));
  PointSet c1(3), c2(3), c3(3);
  c1.insert(parse_point("100"));
  c2.insert(parse_point("010"));
  c3.insert(parse_point("001"));
  return partition_from_sets(a, {c1, c2, c3});
}

int run_cli(const std::string& args) {
  const char* bin = std::getenv("FKGLAB_BIN");
  if (!bin) return -1;
  std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. The fixed point measure of the 3-cube violates the product bound at the
// canonical partition, exactly and fast, and the driver exits with code 1.
void criterion1() {
  Measure mu = fixed_point_measure(3);
  Partition p = mu3_partition();
  auto start = std::chrono::steady_clock::now();
  InequalityReport r = check_strong_inequality(mu, p);
  double elapsed = ms_since(start);
  bool ok = r.lhs == R("1/18") && r.rhs == R("1/12") &&
            r.margin == R("-1/36") && !r.holds && elapsed < 1.0;

  std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("fkglab_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  save_measure(mu, (dir / "mu3.json").string());
  save_partition(p, (dir / "part.json").string());
  int code = run_cli("strong " + (dir / "mu3.json").string() + " " +
                     (dir / "part.json").string());
  std::filesystem::remove_all(dir);
  ok = ok && code == 1;

  std::ostringstream os;
  os << "fixed point counterexample 1/18 < 1/12, check took " << elapsed
     << " ms, driver exit " << code;
  report(1, ok, os.str());
}

// 2. The same measure is positively associated: full ordered scan over the
// 20 upsets of the 3-cube finds no violating pair.
void criterion2() {
  bool ok = cached_upsets(3).size() == 20;
  ok = ok && !check_positive_association(fixed_point_measure(3));
  report(2, ok, "positive association holds over all 400 upset pairs");
}

// 3. The lattice scan pinpoints the first violating pair of the fixed point
// measure: the two singletons with product 1/36 against joint mass 0.
void criterion3() {
  auto v = check_fkg_property(fixed_point_measure(3));
  bool ok = v.has_value() && point_str(v->a) == "100" &&
            point_str(v->b) == "010" && v->lhs == 0 && v->rhs == R("1/36");
  report(3, ok, "lattice condition witness (100, 010) with 0 < 1/36");
}

// 4. The product bound holds on 1000 random product measures with random
// partitions, and exhaustively over all valid partitions of cubes up to
// dimension 3 under 100 further random product measures per dimension.
void criterion4() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(20240001);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int n = rng.range(1, 5);
    int k = rng.range(2, 5);
    Measure mu = random_product_measure(rng, n);
    Partition p = random_partition(rng, n, k);
    ok = check_strong_inequality(mu, p).holds;
  }
  std::uint64_t exhaustive = 0;
  for (int n = 1; n <= 3 && ok; ++n) {
    auto parts = enumerate_valid_partitions(n);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      Measure mu = random_product_measure(rng, n);
      for (const auto& p : parts) {
        if (!check_strong_inequality(mu, p).holds) {
          ok = false;
          break;
        }
        ++exhaustive;
      }
    }
  }
  std::ostringstream os;
  os << "product bound held on 1000 random trials and " << exhaustive
     << " exhaustive partition checks (" << ms_since(start) << " ms)";
  report(4, ok, os.str());
}

// 5. Outputs of 200 random monotone circuits satisfy the bound for every
// valid partition of their output cube.
void criterion5() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(20240002);
  bool ok = true;
  std::uint64_t checks = 0;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int m = rng.range(1, 4);
    int n = rng.range(1, 3);
    Realization r = random_realization(rng, m, n);
    Measure mu = pushforward(r);
    for (const auto& p : enumerate_valid_partitions(n)) {
      if (!check_strong_inequality(mu, p).holds) {
        ok = false;
        break;
      }
      ++checks;
    }
  }
  std::ostringstream os;
  os << "200 monotone circuit measures, " << checks
     << " partition checks (" << ms_since(start) << " ms)";
  report(5, ok, os.str());
}

// 6. Compile and verify 50 random full support measures: monotone outputs
// and an exact pushforward match, also after a serialization round trip.
void criterion6() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(20240003);
  bool ok = true;
  std::string why;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    int n = rng.range(1, 3);
    Measure mu = random_ising_measure(rng, n);
    Realization r = realize(mu);
    RealizationVerdict v = verify_realization(r, mu);
    ok = v.ok;
    if (ok) {
      Realization back = realization_from_json(realization_to_json(r));
      ok = verify_realization(back, mu).ok;
    }
    if (!ok) why = v.detail;
  }
  std::ostringstream os;
  os << "50 realization round trips" << (why.empty() ? "" : ": " + why)
     << " (" << ms_since(start) << " ms)";
  report(6, ok, os.str());
}

// 7. The fiber decomposition obligations verify on 500 random product
// measures with random partitions.
void criterion7() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(20240004);
  bool ok = true;
  for (int trial = 0; trial < 500 && ok; ++trial) {
    int n = rng.range(1, 4);
    int k = rng.range(2, 5);
    Measure mu = random_product_measure(rng, n);
    Partition p = random_partition(rng, n, k);
    InductionVerdict v = verify_induction_step(induction_trace(mu, p));
    ok = v.ok;
  }
  std::ostringstream os;
  os << "500 fiber decompositions verified (" << ms_since(start) << " ms)";
  report(7, ok, os.str());
}

// 8. Percolation checks: the pinned triangle and path tables, 1000 random
// graphs satisfying the inequality, and 100 bit exact embedding cross
// checks.
void criterion8() {
  auto start = std::chrono::steady_clock::now();
  EdgeGraph tri = make_graph(3, {Edge{0, 1, R("1/2")}, Edge{0, 2, R("1/2")},
                                 Edge{1, 2, R("1/2")}});
  TriplePartitionProbs tp = exact_triple_probs(tri, {0, 1, 2});
  bool ok = tp.p123 == R("1/2") && tp.p12_3 == R("1/8") &&
            tp.p13_2 == R("1/8") && tp.p1_23 == R("1/8") &&
            tp.p1_2_3 == R("1/8");

  EdgeGraph path = make_graph(3, {Edge{0, 1, R("1/2")}, Edge{1, 2, R("1/2")}});
  InequalityReport pr =
      check_percolation_inequality(exact_triple_probs(path, {0, 1, 2}));
  ok = ok && pr.lhs == R("1/16") && pr.rhs == R("1/16") && pr.margin == 0;

  Rng rng(20240005);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    EdgeGraph g = random_graph(rng, 7, 12);
    TriplePartitionProbs p = exact_triple_probs(g, {0, 1, 2});
    InequalityReport rep = check_percolation_inequality(p);
    ok = rep.holds;
    if (ok && trial < 100) {
      auto [mu, part] = percolation_to_partition(g, {0, 1, 2});
      InequalityReport emb = check_strong_inequality(mu, part);
      ok = emb.lhs == rep.lhs && emb.rhs == rep.rhs;
    }
  }
  std::ostringstream os;
  os << "triangle and path tables pinned, 1000 random graphs, 100 embedding"
     << " cross checks (" << ms_since(start) << " ms)";
  report(8, ok, os.str());
}

// 9. Degree sets: pinned exact tables for n up to 3, the tail product bound
// at every threshold, and the central comparison.
void criterion9() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::vector<const char*>> tables{
      {"1/2", "0", "1/2"},
      {"5/32", "1/4", "3/16", "1/4", "5/32"},
      {"929/16384", "291/2048", "3255/16384", "105/512", "3255/16384",
       "291/2048", "929/16384"}};
  for (int n = 1; n <= 3 && ok; ++n) {
    DegreeSetDistribution d = exact_degree_distribution(n);
    for (int j = 0; j <= 2 * n && ok; ++j)
      ok = d.probs[j] == R(tables[n - 1][j]);
    for (int k = 0; k <= 2 * n && ok; ++k)
      ok = check_degree_corollary(d, k).holds;
    ok = ok && check_central_bound(d).holds;
  }
  std::ostringstream os;
  os << "degree tables pinned and both bounds hold for n in {1, 2, 3} ("
     << ms_since(start) << " ms)";
  report(9, ok, os.str());
}

// 10. Calibration: in 100 seeded sampling runs of 10^5 draws, the exact
// values sit inside the 99% Hoeffding band in at least 99 runs, for both
// sampling kernels.
void criterion10() {
  auto start = std::chrono::steady_clock::now();
  const std::uint64_t samples = 100000;

  DegreeSetDistribution d2 = exact_degree_distribution(2);
  int degree_good = 0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    McDegreeEstimate est = mc_degree_distribution(2, samples, run);
    bool inside = true;
    for (int j = 0; j <= 4; ++j)
      inside = inside && std::abs(est.freq[j] - rat_double(d2.probs[j])) <=
                             est.half_width;
    if (inside) ++degree_good;
  }

  EdgeGraph tri = make_graph(3, {Edge{0, 1, R("1/2")}, Edge{0, 2, R("1/2")},
                                 Edge{1, 2, R("1/2")}});
  TriplePartitionProbs tp = exact_triple_probs(tri, {0, 1, 2});
  std::vector<Rat> exact{tp.p123, tp.p12_3, tp.p13_2, tp.p1_23, tp.p1_2_3};
  int triple_good = 0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    McTripleEstimate est = mc_triple_probs(tri, {0, 1, 2}, samples, run);
    bool inside = true;
    for (int i = 0; i < 5; ++i)
      inside = inside && std::abs(est.freq[i] - rat_double(exact[i])) <=
                             est.half_width;
    if (inside) ++triple_good;
  }

  bool ok = degree_good >= 99 && triple_good >= 99;
  std::ostringstream os;
  os << "coverage " << degree_good << "/100 degree runs and " << triple_good
     << "/100 connectivity runs (" << ms_since(start) << " ms)";
  report(10, ok, os.str());
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures == 0 ? "ACCEPTED" : "REJECTED") << " after "
            << ms_since(start) / 1000.0 << " s\n";
  return failures == 0 ? 0 : 1;
}
