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

#include <catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mecdec/generators.hpp"
#include "mecdec/mec_engine.hpp"

using namespace mecdec;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mecdec_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream f(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(f, l);) out.push_back(l);
  return out;
}

// Drops the wall_time_ms column.
std::string without_time(const std::string& row) {
  std::vector<std::string> cols;
  std::stringstream ss(row);
  for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (i != 6) out += cols[i] + ",";
  return out;
}

}  // namespace

TEST_CASE("decompose prints the MEC document") {
  const Result r = run({"decompose", "--example", "fig1", "--algo", "basic", "--backend", "bdd"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(parse_mec_document(r.out).mecs.size() == 3);
}

TEST_CASE("decompose exit codes") {
  CHECK(run({"decompose", "--input", "/nonexistent/x.mdp"}).code == cli::kExitInput);
  CHECK(run({"decompose"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "--example", "fig1", "--algo", "lockstep"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "--example", "fig1", "--start", "6"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "--example", "nope"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);

  const fs::path dir = scratch("bad");
  std::ofstream(dir / "bad.mdp") << "mdp 1 1\nt 0 0 0 0.5\n";
  const Result bad = run({"decompose", "--input", (dir / "bad.mdp").string()});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.err.find("sum") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("decompose --check and --stats on a random instance") {
  const fs::path dir = scratch("check");
  const std::string mdp = (dir / "r.mdp").string();
  REQUIRE(run({"gen-random", "--states", "30", "--actions", "3", "--enable-p", "0.5", "--branch-max", "3",
               "--seed", "11", "--out", mdp})
              .code == 0);
  const std::string stats = (dir / "s.txt").string();
  const std::string out = (dir / "m.txt").string();
  const Result r = run({"decompose", "--input", mdp, "--check", "--stats", stats, "--output", out});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  const auto kv = lines_of(stats);
  CHECK(std::find(kv.begin(), kv.end(), "algo=interleave") != kv.end());
  CHECK(std::any_of(kv.begin(), kv.end(), [](const std::string& l) { return l.rfind("pre_post_ops=", 0) == 0; }));
  fs::remove_all(dir);
}

TEST_CASE("gen-random rejects bad parameters and honours MECDEC_SEED") {
  const fs::path dir = scratch("gen");
  const std::string f = (dir / "x.mdp").string();
  CHECK(run({"gen-random", "--states", "0", "--actions", "1", "--out", f}).code == cli::kExitUsage);
  CHECK(run({"gen-random", "--states", "4", "--actions", "1", "--enable-p", "1.5", "--out", f}).code ==
        cli::kExitUsage);

  ::setenv("MECDEC_SEED", "42", 1);
  REQUIRE(run({"gen-random", "--states", "12", "--actions", "2", "--out", f}).code == 0);
  ::unsetenv("MECDEC_SEED");
  GeneratorParams p;
  p.num_states = 12;
  p.num_actions = 2;
  p.seed = 42;
  CHECK(load_mdp_file(f) == generate_random(p));
  fs::remove_all(dir);
}

TEST_CASE("compare agrees on the running example") {
  const Result r = run({"compare", "--example", "fig1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind(cli::kCsvHeader, 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(run({"compare", "--example", "fig1", "--algos", ""}).code == cli::kExitUsage);
  CHECK(run({"compare", "--example", "fig1", "--algos", ","}).code == cli::kExitUsage);
}

TEST_CASE("compare detects a corrupted configuration") {
  const std::string cmd = std::string(MECDEC_FAULTY_EXE) + " compare --example fig1 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == cli::kExitCheck);
  const std::string one = std::string(MECDEC_FAULTY_EXE) +
                          " compare --example fig1 --algos basic --backends bitset,bdd >/dev/null 2>&1";
  const int ok = std::system(one.c_str());
  CHECK(WEXITSTATUS(ok) == 0);
}

TEST_CASE("scc and check subcommands") {
  const Result s = run({"scc", "--example", "fig1", "--backend", "bdd"});
  CHECK(s.code == 0);
  CHECK(s.out == "0 1 2 3 5\n4\n");
  const Result c = run({"check", "--example", "fig1"});
  CHECK(c.code == 0);
  CHECK(c.out == "OK\n");
}

TEST_CASE("bench writes one row per instance and configuration") {
  const fs::path dir = scratch("bench");
  REQUIRE(run({"gen-suite", "--out", (dir / "suite").string(), "--count", "10", "--seed", "5"}).code == 0);
  const std::string csv1 = (dir / "a.csv").string(), csv2 = (dir / "b.csv").string();
  REQUIRE(run({"bench", "--suite", (dir / "suite").string(), "--csv", csv1, "--jobs", "4"}).code == 0);
  REQUIRE(run({"bench", "--suite", (dir / "suite").string(), "--csv", csv2}).code == 0);
  const auto a = lines_of(csv1), b = lines_of(csv2);
  REQUIRE(a.size() == 41);
  CHECK(a[0] == cli::kCsvHeader);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i].substr(a[i].size() - 3) == ",ok");
    CHECK(without_time(a[i]) == without_time(b[i]));
  }
  fs::remove_all(dir);
}

TEST_CASE("bench records timeouts and unreadable instances") {
  const fs::path dir = scratch("timeout");
  fs::create_directories(dir / "suite");
  std::ofstream(dir / "suite" / "big.mdp") << serialize_mdp(path_of_sccs(200, 3));
  std::ofstream(dir / "suite" / "broken.mdp") << "mdp 2 1\n";
  const std::string csv = (dir / "t.csv").string();
  REQUIRE(run({"bench", "--suite", (dir / "suite").string(), "--csv", csv, "--timeout-s", "0.0001", "--algos",
               "interleave", "--backends", "bitset"})
              .code == 0);
  const auto rows = lines_of(csv);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == "big,600,2,799,interleave,bitset,0.100,,,,,,,timeout");
  CHECK(rows[2] == "broken,,,,interleave,bitset,,,,,,,,error");
  CHECK(run({"bench", "--csv", csv}).code == cli::kExitUsage);
  CHECK(run({"bench", "--suite", (dir / "missing").string(), "--csv", csv}).code == cli::kExitInput);
  fs::remove_all(dir);
}

TEST_CASE("bench seed sweep is reproducible") {
  const fs::path dir = scratch("sweep");
  const std::string c1 = (dir / "1.csv").string(), c2 = (dir / "2.csv").string();
  REQUIRE(run({"bench", "--seed-sweep", "3", "--csv", c1, "--algos", "interleave"}).code == 0);
  REQUIRE(run({"bench", "--seed-sweep", "3", "--csv", c2, "--algos", "interleave"}).code == 0);
  const auto a = lines_of(c1), b = lines_of(c2);
  REQUIRE(a.size() == 7);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(without_time(a[i]) == without_time(b[i]));
  fs::remove_all(dir);
}
