#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fkglab/degree_sets.hpp"
#include "fkglab/gen.hpp"
#include "fkglab/io.hpp"
#include "fkglab/measure.hpp"
#include "fkglab/parallel.hpp"
#include "fkglab/percolation.hpp"
#include "fkglab/realization.hpp"
#include "fkglab/rng.hpp"
#include "fkglab/strong.hpp"
#include "fkglab/suite.hpp"
#include "fkglab/upsets.hpp"

namespace {

using fkglab::Rat;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInvalid = 2;

struct Report {
  std::string command;
  std::string verdict = "holds";
  std::vector<std::string> lines;  // text mode body, verdict appended last
  json witnesses = json::object();

  int exit_code() const {
    if (verdict == "holds") return kExitHolds;
    if (verdict == "violated") return kExitViolated;
    return kExitInvalid;
  }
};

std::string g6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void emit(const Report& r, bool as_json) {
  if (as_json) {
    json j;
    j["command"] = r.command;
    j["verdict"] = r.verdict;
    j["witnesses"] = r.witnesses;
    j["exitCode"] = r.exit_code();
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& line : r.lines) std::cout << line << "\n";
  std::cout << "verdict " << r.verdict << "\n";
}

std::string rs(const Rat& x) { return fkglab::rat_str(x); }

void add_inequality(Report& rep, const fkglab::InequalityReport& r) {
  rep.lines.push_back("lhs " + rs(r.lhs));
  rep.lines.push_back("rhs " + rs(r.rhs));
  rep.lines.push_back("margin " + rs(r.margin));
  rep.witnesses["lhs"] = rs(r.lhs);
  rep.witnesses["rhs"] = rs(r.rhs);
  rep.witnesses["margin"] = rs(r.margin);
  rep.verdict = r.holds ? "holds" : "violated";
}

Report cmd_check_fkg(const std::string& path, int workers, bool verbose) {
  Report rep;
  rep.command = "check-fkg";
  fkglab::Measure mu = fkglab::load_measure(path);
  if (verbose)
    rep.lines.push_back("scanning " + std::to_string(mu.size()) + " * " +
                        std::to_string(mu.size()) + " point pairs");
  auto v = fkglab::check_fkg_property(mu, workers);
  if (v) {
    rep.verdict = "violated";
    rep.lines.push_back("a " + point_str(v->a));
    rep.lines.push_back("b " + point_str(v->b));
    rep.lines.push_back("lhs " + rs(v->lhs));
    rep.lines.push_back("rhs " + rs(v->rhs));
    rep.witnesses["a"] = point_str(v->a);
    rep.witnesses["b"] = point_str(v->b);
    rep.witnesses["lhs"] = rs(v->lhs);
    rep.witnesses["rhs"] = rs(v->rhs);
  }
  return rep;
}

Report cmd_check_pa(const std::string& path, bool verbose) {
  Report rep;
  rep.command = "check-pa";
  fkglab::Measure mu = fkglab::load_measure(path);
  if (verbose)
    rep.lines.push_back(
        "scanning ordered pairs over " +
        std::to_string(fkglab::cached_upsets(mu.dim()).size()) + " upsets");
  auto v = fkglab::check_positive_association(mu);
  if (v) {
    rep.verdict = "violated";
    auto set_str = [](const fkglab::PointSet& s) {
      std::string out;
      for (auto m : s.members()) {
        if (!out.empty()) out += " ";
        out += point_str(fkglab::Point{m, s.dim()});
      }
      return out;
    };
    rep.lines.push_back("E1 " + set_str(v->e1));
    rep.lines.push_back("E2 " + set_str(v->e2));
    rep.lines.push_back("gap " + rs(v->gap));
    rep.witnesses["E1"] = set_str(v->e1);
    rep.witnesses["E2"] = set_str(v->e2);
    rep.witnesses["gap"] = rs(v->gap);
  }
  return rep;
}

Report cmd_strong(const std::string& mu_path, const std::string& part_path) {
  Report rep;
  rep.command = "strong";
  fkglab::Measure mu = fkglab::load_measure(mu_path);
  fkglab::Partition p = fkglab::load_partition(part_path);
  fkglab::BlockMasses m = fkglab::block_masses(mu, p);
  rep.lines.push_back("mu(A) " + rs(m.a));
  rep.lines.push_back("mu(B) " + rs(m.b));
  rep.witnesses["A"] = rs(m.a);
  rep.witnesses["B"] = rs(m.b);
  json cs = json::array();
  for (int i = 0; i < p.k; ++i) {
    rep.lines.push_back("mu(C" + std::to_string(i + 1) + ") " + rs(m.c[i]));
    cs.push_back(rs(m.c[i]));
  }
  rep.witnesses["C"] = cs;
  add_inequality(rep, fkglab::check_strong_inequality(mu, p));
  return rep;
}

Report cmd_trace(const std::string& mu_path, const std::string& part_path) {
  Report rep;
  rep.command = "trace";
  fkglab::Measure mu = fkglab::load_measure(mu_path);
  fkglab::Partition p = fkglab::load_partition(part_path);
  fkglab::InductionTrace t = fkglab::induction_trace(mu, p);
  rep.lines.push_back("q " + rs(t.q));
  rep.lines.push_back("a0 " + rs(t.a0));
  rep.lines.push_back("b0 " + rs(t.b0));
  rep.lines.push_back("d " + rs(t.d));
  rep.witnesses["q"] = rs(t.q);
  rep.witnesses["a0"] = rs(t.a0);
  rep.witnesses["b0"] = rs(t.b0);
  rep.witnesses["d"] = rs(t.d);
  json blocks = json::array();
  for (int i = 0; i < t.k; ++i) {
    rep.lines.push_back("C" + std::to_string(i + 1) + " plus " +
                        rs(t.c_plus[i]) + " circ " + rs(t.c_circ[i]) +
                        " minus " + rs(t.c_minus[i]));
    blocks.push_back(json{{"plus", rs(t.c_plus[i])},
                          {"circ", rs(t.c_circ[i])},
                          {"minus", rs(t.c_minus[i])}});
  }
  rep.witnesses["C"] = blocks;
  fkglab::InductionVerdict v = fkglab::verify_induction_step(t);
  const char* orient = v.orientation == fkglab::FaceOrientation::kFaceOne
                           ? "face1"
                       : v.orientation == fkglab::FaceOrientation::kFaceZero
                           ? "face0"
                           : "either";
  if (v.ok) {
    rep.lines.push_back(std::string("orientation ") + orient);
    rep.witnesses["orientation"] = orient;
  } else {
    rep.lines.push_back("failed obligation " +
                        std::to_string(v.failed_obligation) + ": " + v.detail);
    rep.witnesses["failedObligation"] = v.failed_obligation;
    rep.witnesses["detail"] = v.detail;
  }
  rep.verdict = v.ok ? "holds" : "violated";
  return rep;
}

Report cmd_mu_fixed(int n, const std::string& out_path) {
  Report rep;
  rep.command = "mu-fixed";
  fkglab::Measure mu = fkglab::fixed_point_measure(n);
  json weights = json::object();
  for (std::uint32_t v = 0; v < mu.size(); ++v) {
    std::string key = point_str(fkglab::Point{v, n});
    rep.lines.push_back(key + " " + rs(mu.at(v)));
    weights[key] = rs(mu.at(v));
  }
  rep.witnesses["weights"] = weights;
  if (!out_path.empty()) fkglab::save_measure(mu, out_path);
  return rep;
}

Report cmd_realize(const std::string& mu_path, const std::string& out_path) {
  Report rep;
  rep.command = "realize";
  fkglab::Measure mu = fkglab::load_measure(mu_path);
  fkglab::Realization r = fkglab::realize(mu);
  rep.lines.push_back("m " + std::to_string(r.source_count()));
  rep.witnesses["m"] = r.source_count();
  json sources = json::array();
  for (int j = 0; j < r.source_count(); ++j) {
    rep.lines.push_back("source " + std::to_string(j + 1) + " " +
                        rs(r.sources[j]) + " " + r.names[j]);
    sources.push_back(json{{"p", rs(r.sources[j])}, {"name", r.names[j]}});
  }
  rep.witnesses["sources"] = sources;
  fkglab::save_realization(r, out_path);
  return rep;
}

Report cmd_verify_realization(const std::string& real_path,
                              const std::string& mu_path, int workers) {
  Report rep;
  rep.command = "verify-realization";
  fkglab::Realization r = fkglab::load_realization(real_path);
  fkglab::Measure mu = fkglab::load_measure(mu_path);
  fkglab::RealizationVerdict v = fkglab::verify_realization(r, mu, workers);
  if (!v.ok) {
    rep.verdict = "violated";
    rep.lines.push_back(v.detail);
    rep.witnesses["detail"] = v.detail;
  }
  return rep;
}

Report cmd_percolation(const std::string& path, std::array<int, 3> t,
                       const std::vector<std::uint64_t>& mc, int workers) {
  Report rep;
  rep.command = "percolation";
  fkglab::EdgeGraph g = fkglab::load_graph(path);
  if (!mc.empty()) {
    fkglab::McTripleEstimate est =
        fkglab::mc_triple_probs(g, t, mc[0], mc[1], workers);
    const char* names[5] = {"123", "12|3", "13|2", "1|23", "1|2|3"};
    json freq = json::object();
    for (int i = 0; i < 5; ++i) {
      rep.lines.push_back("freq(" + std::string(names[i]) + ") " +
                          g6(est.freq[i]));
      freq[names[i]] = est.freq[i];
    }
    rep.lines.push_back("half-width " + g6(est.half_width));
    rep.witnesses["freq"] = freq;
    rep.witnesses["halfWidth"] = est.half_width;
    rep.witnesses["samples"] = est.samples;
    return rep;
  }
  fkglab::TriplePartitionProbs pr = fkglab::exact_triple_probs(g, t, workers);
  rep.lines.push_back("P(123) " + rs(pr.p123));
  rep.lines.push_back("P(12|3) " + rs(pr.p12_3));
  rep.lines.push_back("P(13|2) " + rs(pr.p13_2));
  rep.lines.push_back("P(1|23) " + rs(pr.p1_23));
  rep.lines.push_back("P(1|2|3) " + rs(pr.p1_2_3));
  rep.witnesses["p123"] = rs(pr.p123);
  rep.witnesses["p12_3"] = rs(pr.p12_3);
  rep.witnesses["p13_2"] = rs(pr.p13_2);
  rep.witnesses["p1_23"] = rs(pr.p1_23);
  rep.witnesses["p1_2_3"] = rs(pr.p1_2_3);
  add_inequality(rep, fkglab::check_percolation_inequality(pr));
  return rep;
}

Report cmd_degree(int n, const std::vector<std::uint64_t>& mc, bool force,
                  int workers) {
  Report rep;
  rep.command = "degree";
  if (!mc.empty()) {
    fkglab::McDegreeEstimate est =
        fkglab::mc_degree_distribution(n, mc[0], mc[1], workers);
    json freq = json::array();
    for (int j = 0; j <= 2 * n; ++j) {
      rep.lines.push_back("freq(" + std::to_string(j) + ") " +
                          g6(est.freq[j]));
      freq.push_back(est.freq[j]);
    }
    rep.lines.push_back("half-width " + g6(est.half_width));
    rep.witnesses["freq"] = freq;
    rep.witnesses["halfWidth"] = est.half_width;
    rep.witnesses["samples"] = est.samples;
    return rep;
  }
  fkglab::DegreeSetDistribution dist =
      fkglab::exact_degree_distribution(n, force, workers);
  json probs = json::array();
  for (int j = 0; j <= 2 * n; ++j) {
    rep.lines.push_back("P(" + std::to_string(j) + ") " + rs(dist.probs[j]));
    probs.push_back(rs(dist.probs[j]));
  }
  rep.witnesses["probs"] = probs;
  bool all_hold = true;
  json tails = json::array();
  for (int k = 0; k <= 2 * n; ++k) {
    fkglab::InequalityReport r = fkglab::check_degree_corollary(dist, k);
    all_hold = all_hold && r.holds;
    rep.lines.push_back("k " + std::to_string(k) + " tails " + rs(r.lhs) +
                        " bound " + rs(r.rhs) + " margin " + rs(r.margin));
    tails.push_back(json{{"k", k},
                         {"tails", rs(r.lhs)},
                         {"bound", rs(r.rhs)},
                         {"margin", rs(r.margin)}});
  }
  rep.witnesses["tailBounds"] = tails;
  fkglab::CentralBoundReport central = fkglab::check_central_bound(dist);
  all_hold = all_hold && central.holds;
  rep.lines.push_back(std::string("central ") +
                      (central.holds ? "holds" : "violated") + " cap " +
                      g6(central.cap) + " limit " + g6(central.limit));
  rep.witnesses["central"] = json{{"holds", central.holds},
                                  {"cap", central.cap},
                                  {"limit", central.limit}};
  rep.verdict = all_hold ? "holds" : "violated";
  return rep;
}

Report cmd_suite(std::uint64_t seed, std::uint64_t trials, int workers) {
  Report rep;
  rep.command = "suite";
  fkglab::SuiteOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.workers = workers;
  auto sections = fkglab::run_suite(opt);
  bool all_ok = true;
  json secs = json::array();
  for (const auto& s : sections) {
    all_ok = all_ok && s.ok;
    rep.lines.push_back(s.name + " " + std::to_string(s.trials) + " " +
                        (s.ok ? "ok" : "FAIL " + s.detail));
    secs.push_back(json{{"name", s.name},
                        {"trials", s.trials},
                        {"ok", s.ok},
                        {"detail", s.detail}});
  }
  rep.witnesses["sections"] = secs;
  rep.verdict = all_ok ? "holds" : "violated";
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for correlation inequalities on the hypercube"};
  app.require_subcommand(1);

  bool as_json = false;
  bool verbose = false;
  int workers = 0;
  app.add_flag("--json", as_json, "machine readable output");
  app.add_flag("--verbose", verbose, "extra progress detail");
  app.add_option("--workers", workers,
                 "worker threads (default: FKGLAB_WORKERS or 1)");
  app.fallthrough();

  std::string measure_path, partition_path, extra_path, out_path;
  int n = 0;
  std::array<int, 3> triple{0, 1, 2};
  std::vector<std::uint64_t> mc;
  bool force = false;
  std::uint64_t seed = 42, trials = 1000;

  auto* c_fkg = app.add_subcommand("check-fkg", "lattice condition scan");
  c_fkg->add_option("measure", measure_path)->required();

  auto* c_pa = app.add_subcommand("check-pa", "positive association scan");
  c_pa->add_option("measure", measure_path)->required();

  auto* c_strong = app.add_subcommand("strong", "pair product vs e2 bound");
  c_strong->add_option("measure", measure_path)->required();
  c_strong->add_option("partition", partition_path)->required();

  auto* c_trace = app.add_subcommand("trace", "fiber decomposition checks");
  c_trace->add_option("measure", measure_path)->required();
  c_trace->add_option("partition", partition_path)->required();

  auto* c_fixed = app.add_subcommand("mu-fixed", "fixed point set measure");
  c_fixed->add_option("n", n)->required();
  c_fixed->add_option("--out", out_path, "write the measure to a file");

  auto* c_realize = app.add_subcommand("realize", "compile to sources");
  c_realize->add_option("measure", measure_path)->required();
  c_realize->add_option("out", out_path)->required();

  auto* c_verify = app.add_subcommand("verify-realization",
                                      "monotonicity plus pushforward");
  c_verify->add_option("realization", extra_path)->required();
  c_verify->add_option("measure", measure_path)->required();

  auto* c_perc = app.add_subcommand("percolation", "triple connectivity");
  c_perc->add_option("graph", extra_path)->required();
  c_perc->add_option("v1", triple[0])->required();
  c_perc->add_option("v2", triple[1])->required();
  c_perc->add_option("v3", triple[2])->required();
  c_perc->add_option("--mc", mc, "samples seed")->expected(2);

  auto* c_degree = app.add_subcommand("degree", "high degree vertex counts");
  c_degree->add_option("n", n)->required();
  c_degree->add_option("--mc", mc, "samples seed")->expected(2);
  c_degree->add_flag("--force", force, "allow the n = 4 enumeration");

  auto* c_suite = app.add_subcommand("suite", "randomized property battery");
  c_suite->add_option("seed", seed);
  c_suite->add_option("trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInvalid;
  }

  try {
    Report rep;
    if (*c_fkg)
      rep = cmd_check_fkg(measure_path, workers, verbose);
    else if (*c_pa)
      rep = cmd_check_pa(measure_path, verbose);
    else if (*c_strong)
      rep = cmd_strong(measure_path, partition_path);
    else if (*c_trace)
      rep = cmd_trace(measure_path, partition_path);
    else if (*c_fixed)
      rep = cmd_mu_fixed(n, out_path);
    else if (*c_realize)
      rep = cmd_realize(measure_path, out_path);
    else if (*c_verify)
      rep = cmd_verify_realization(extra_path, measure_path, workers);
    else if (*c_perc)
      rep = cmd_percolation(extra_path, triple, mc, workers);
    else if (*c_degree)
      rep = cmd_degree(n, mc, force, workers);
    else
      rep = cmd_suite(seed, trials, workers);
    emit(rep, as_json);
    return rep.exit_code();
  } catch (const std::exception& e) {
    if (as_json) {
      json j;
      j["verdict"] = "invalid-input";
      j["error"] = e.what();
      j["exitCode"] = kExitInvalid;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInvalid;
  }
}
