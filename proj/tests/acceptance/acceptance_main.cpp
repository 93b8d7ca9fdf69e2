/*
 * Copyright 2026 The mecdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mecdec/generators.hpp"
#include "mecdec/mec_engine.hpp"
#include "mecdec/oracle.hpp"

using namespace mecdec;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

constexpr BackendKind kBackends[] = {BackendKind::kBitset, BackendKind::kBdd};
constexpr Algorithm kAlgos[] = {Algorithm::kBasic, Algorithm::kInterleave};

std::uint64_t depth_bound(std::size_t n) {
  if (n <= 1) return 1;
  return static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(n)) / std::log(1.5) - 1e-12)) + 1;
}

// Random suite: sizes, action counts, enabling density and branching all swept.
std::vector<ExplicitMdp> random_suite(std::size_t count) {
  std::vector<ExplicitMdp> out;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorParams p;
    p.num_states = 1 + (i * 37) % 50;
    p.num_actions = 1 + (i / 5) % 4;
    p.enable_p = 0.1 + 0.1 * static_cast<double>((i / 3) % 10);
    p.branch_min = 1;
    p.branch_max = 1 + (i / 2) % 4;
    p.seed = 1000003 * i + 17;
    out.push_back(generate_random(p));
  }
  return out;
}

struct Run {
  MecResult result;
  OpStats stats;
  std::size_t violations = 0;
};

// ---- criterion 1 ------------------------------------------------------------

void fig1_ground_truth() {
  constexpr StateId P1 = 0, P2 = 1, P3 = 2, P4 = 3, P5 = 4, P6 = 5;
  MecResult truth;
  truth.mecs.push_back({{P5}, {{P5, 4, P5}}});
  truth.mecs.push_back({{P3, P4, P6}, {{P3, 2, P4}, {P4, 3, P6}, {P6, 5, P3}}});
  truth.mecs.push_back({{P1, P2}, {{P1, 0, P2}, {P2, 1, P1}}});
  truth.canonicalize();

  int good = 0, total = 0;
  for (Algorithm a : kAlgos)
    for (BackendKind b : kBackends)
      for (bool with_start : {false, true}) {
        std::vector<std::string> args = {"decompose", "--example", "fig1", "--algo", std::string(to_string(a)),
                                         "--backend", std::string(to_string(b))};
        if (with_start) args.insert(args.end(), {"--start", "4"});
        std::ostringstream out, err;
        ++total;
        if (cli::run_cli(args, out, err) == 0 && parse_mec_document(out.str()) == truth) ++good;
      }
  report(1, "fig1 ground truth", good == total,
         std::to_string(good) + "/" + std::to_string(total) + " CLI runs produce exactly {P5}, {P3,P4,P6}, {P1,P2}");
}

// ---- criteria 2-5 over the random suite ---------------------------------------

void suite_criteria() {
  const auto suite = random_suite(1000);
  std::size_t mismatched = 0, violation_instances = 0, violations = 0, checks_run = 0;
  std::size_t backend_diffs = 0, depth_breaches = 0;
  std::uint64_t worst_depth_margin = 0;

  for (const auto& mdp : suite) {
    const MecResult want = to_mec_result(mdp, oracle_mec_decomp(mdp));
    std::map<std::pair<Algorithm, BackendKind>, Run> runs;
    std::size_t v_here = 0;
    for (Algorithm a : kAlgos)
      for (BackendKind b : kBackends) {
        LemmaChecker checker(mdp);
        DecomposeOptions o;
        o.observer = &checker;
        auto r = decompose_with_stats(mdp, a, b, o);
        checker.check_result(r.result);
        checks_run += checker.checks();
        v_here += checker.violations().size();
        runs[{a, b}] = {r.result, r.stats, checker.violations().size()};
        if (!(r.result == want)) ++mismatched;
      }
    violations += v_here;
    violation_instances += v_here > 0;
    for (Algorithm a : kAlgos) {
      const Run& x = runs[{a, BackendKind::kBitset}];
      const Run& y = runs[{a, BackendKind::kBdd}];
      if (!(x.result == y.result) || x.stats.pre_post_ops != y.stats.pre_post_ops ||
          x.stats.exists_ops != y.stats.exists_ops || x.stats.pick_ops != y.stats.pick_ops)
        ++backend_diffs;
    }
    for (BackendKind b : kBackends) {
      const std::uint64_t d = runs[{Algorithm::kInterleave, b}].stats.recursion_depth_peak;
      const std::uint64_t bound = depth_bound(mdp.num_states());
      if (d > bound) ++depth_breaches;
      worst_depth_margin = std::max(worst_depth_margin, d);
    }
  }

  report(2, "oracle equivalence", mismatched == 0,
         std::to_string(suite.size()) + " random MDPs x 2 algorithms x 2 backends, " + std::to_string(mismatched) +
             " results differ from the explicit oracle");
  report(3, "lemma assertions", violations == 0,
         std::to_string(checks_run) + " runtime checks, " + std::to_string(violations) + " violations on " +
             std::to_string(violation_instances) + " instances");

  // Structured families join the backend and depth checks.
  std::vector<std::pair<std::string, ExplicitMdp>> families;
  for (auto [k, s] : std::vector<std::pair<int, int>>{{2000, 1}, {1000, 2}, {400, 5}, {100, 20}, {20, 100}})
    families.push_back({"path_of_sccs(" + std::to_string(k) + "," + std::to_string(s) + ")", path_of_sccs(k, s)});
  for (int k : {16, 64, 256}) families.push_back({"chain_of_cycles(" + std::to_string(k) + ",4)", chain_of_cycles(k, 4)});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CrossChainParams p;
    p.num_blocks = 4 + seed;
    p.seed = 77 + seed;
    families.push_back({"cross_chain(" + std::to_string(seed) + ")", chain_of_sccs_with_cross_edges(p)});
  }
  std::string worst_family;
  double worst_ratio = 0;
  for (const auto& [name, mdp] : families) {
    for (Algorithm a : kAlgos) {
      const auto x = decompose_with_stats(mdp, a, BackendKind::kBitset);
      const auto y = decompose_with_stats(mdp, a, BackendKind::kBdd);
      if (!(x.result == y.result) || x.stats.pre_post_ops != y.stats.pre_post_ops ||
          x.stats.exists_ops != y.stats.exists_ops || x.stats.pick_ops != y.stats.pick_ops)
        ++backend_diffs;
      if (a == Algorithm::kInterleave) {
        const std::uint64_t bound = depth_bound(mdp.num_states());
        for (const auto* r : {&x, &y}) {
          if (r->stats.recursion_depth_peak > bound) ++depth_breaches;
          const double ratio = static_cast<double>(r->stats.recursion_depth_peak) / static_cast<double>(bound);
          if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_family = name + " depth " + std::to_string(r->stats.recursion_depth_peak) + " of bound " +
                           std::to_string(bound);
          }
        }
      }
    }
  }

  report(4, "backend equivalence", backend_diffs == 0,
         std::to_string(backend_diffs) + " instance/algorithm pairs where bitset and bdd differ in MECs or "
                                         "pre_post/exists/pick counts (" +
             std::to_string(suite.size() + families.size()) + " instances)");
  report(5, "space bound", depth_breaches == 0,
         std::to_string(depth_breaches) + " interleave runs exceed ceil(log1.5 n)+1; largest depth on the random "
                                          "suite " + std::to_string(worst_depth_margin) + "; tightest family: " +
             worst_family);
}

// ---- criterion 6 ------------------------------------------------------------

void growth_exponent() {
  std::vector<double> xs, ys;
  std::ostringstream pts;
  for (int k : {16, 32, 64, 128, 256}) {
    const auto mdp = chain_of_cycles(k, 4);
    const auto r = decompose_with_stats(mdp, Algorithm::kInterleave, BackendKind::kBitset);
    xs.push_back(std::log(static_cast<double>(mdp.num_states())));
    ys.push_back(std::log(static_cast<double>(r.stats.symbolic_ops())));
    pts << " n=" << mdp.num_states() << ":" << r.stats.symbolic_ops();
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", slope);
  report(6, "operation growth", slope <= 2.1,
         std::string("fitted exponent ") + buf + " on chain_of_cycles(k,4), k=16..256;" + pts.str());
}

// ---- criterion 7 ------------------------------------------------------------

void fig1_redundancy() {
  const auto fig = builtin_example("fig1");
  DecomposeOptions o;
  o.start = 4;  // P5
  bool ok = true;
  std::ostringstream detail;
  for (BackendKind b : kBackends) {
    const auto basic = decompose_with_stats(fig, Algorithm::kBasic, b, o);
    const auto inter = decompose_with_stats(fig, Algorithm::kInterleave, b, o);
    ok = ok && inter.stats.symbolic_ops() < basic.stats.symbolic_ops();
    detail << to_string(b) << " interleave " << inter.stats.symbolic_ops() << " vs basic "
           << basic.stats.symbolic_ops() << "; ";
  }
  report(7, "fig1 redundancy elimination", ok, detail.str() + "start P5, min-id pick");
}

// ---- criterion 8 ------------------------------------------------------------

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string c; std::getline(ss, c, ',');) out.push_back(c);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

void desk_suite() {
  const fs::path root = fs::path(MECDEC_SOURCE_DIR) / "results";
  const fs::path suite_dir = root / "desk_suite";
  const fs::path csv_path = root / "desk_suite.csv";
  std::ifstream csv(csv_path);
  if (!csv || !fs::is_directory(suite_dir)) {
    report(8, "desk suite", false, "missing " + csv_path.string() + " or " + suite_dir.string());
    return;
  }

  // The committed instances must be exactly what gen-suite produces.
  std::size_t regen_diffs = 0, files = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    CrossChainParams p;
    p.num_blocks = 4 + i % 8;
    p.seed = i;
    char name[32];
    std::snprintf(name, sizeof name, "desk-%03zu.mdp", i);
    std::ifstream f(suite_dir / name);
    std::stringstream ss;
    ss << f.rdbuf();
    files += static_cast<bool>(f);
    if (ss.str() != serialize_mdp(chain_of_sccs_with_cross_edges(p))) ++regen_diffs;
  }

  std::string line;
  std::getline(csv, line);
  const bool header_ok = line == cli::kCsvHeader;
  std::map<std::string, std::map<std::string, double>> ops;  // instance -> "algo/backend" -> ops
  std::size_t rows = 0, reproduced = 0, not_ok = 0;
  std::map<std::string, ExplicitMdp> cache;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 14) continue;
    ++rows;
    if (c[13] != "ok") {
      ++not_ok;
      continue;
    }
    const std::string inst = c[0];
    auto it = cache.find(inst);
    if (it == cache.end()) it = cache.emplace(inst, load_mdp_file((suite_dir / (inst + ".mdp")).string())).first;
    const auto r = decompose_with_stats(it->second, parse_algorithm(c[4]), parse_backend_kind(c[5]));
    const std::vector<std::string> again = {std::to_string(r.stats.pre_post_ops), std::to_string(r.stats.exists_ops),
                                            std::to_string(r.stats.basic_set_ops),
                                            std::to_string(r.stats.live_sets_peak),
                                            std::to_string(r.stats.recursion_depth_peak),
                                            std::to_string(r.result.mecs.size())};
    if (again == std::vector<std::string>(c.begin() + 7, c.begin() + 13)) ++reproduced;
    ops[inst][c[4] + "/" + c[5]] = std::stod(c[7]) + std::stod(c[8]);
  }

  std::vector<double> ratios;
  for (const auto& [inst, m] : ops) {
    auto b = m.find("basic/bitset"), i = m.find("interleave/bitset");
    if (b != m.end() && i != m.end() && i->second > 0) ratios.push_back(b->second / i->second);
  }
  std::sort(ratios.begin(), ratios.end());
  double median = 0;
  if (!ratios.empty())
    median = ratios.size() % 2 ? ratios[ratios.size() / 2]
                               : 0.5 * (ratios[ratios.size() / 2 - 1] + ratios[ratios.size() / 2]);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", median);
  const bool ok = header_ok && files == 50 && regen_diffs == 0 && rows == 200 && not_ok == 0 &&
                  reproduced == rows && ratios.size() == 50 && median > 1.0;
  report(8, "desk suite", ok,
         std::string("median basic/interleave ops ") + buf + " over " + std::to_string(ratios.size()) +
             " instances; " + std::to_string(reproduced) + "/" + std::to_string(rows) +
             " CSV rows reproduce op columns; " + std::to_string(50 - regen_diffs) + "/50 instance files regenerate");
}

}  // namespace

int main() {
  fig1_ground_truth();
  suite_criteria();
  growth_exponent();
  fig1_redundancy();
  desk_suite();
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
