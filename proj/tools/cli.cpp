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

#include "cli.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mecdec/generators.hpp"
#include "mecdec/mec_engine.hpp"
#include "mecdec/oracle.hpp"
#include "mecdec/reachability.hpp"

namespace mecdec::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("MECDEC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MECDEC_SEED is not an unsigned integer: ") + env);
  }
}

struct Source {
  std::string input;
  std::string example;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "MDP file");
    cmd->add_option("--example", example, "built-in example name");
  }

  ExplicitMdp load() const {
    if (!input.empty() && !example.empty()) throw UsageError("--input and --example are mutually exclusive");
    if (!example.empty()) {
      try {
        return builtin_example(example);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (input.empty()) throw UsageError("one of --input or --example is required");
    try {
      return load_mdp_file(input);
    } catch (const std::exception& e) {
      throw InputError(input + ": " + e.what());
    }
  }

  std::string label() const { return example.empty() ? fs::path(input).stem().string() : example; }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

template <class T, class F>
std::vector<T> parse_list(const std::string& text, const char* what, F parse) {
  std::vector<T> out;
  try {
    for (const auto& s : split_list(text)) out.push_back(parse(s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

Algorithm algo_arg(const std::string& s) {
  try {
    return parse_algorithm(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

BackendKind backend_arg(const std::string& s) {
  try {
    return parse_backend_kind(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

DecompositionRun run_one(const ExplicitMdp& mdp, Algorithm algo, BackendKind backend,
                         const DecomposeOptions& opts) {
  DecompositionRun run = decompose_with_stats(mdp, algo, backend, opts);
#ifdef MECDEC_FAULT_INJECTION
  // Self-test build: corrupt one configuration so the harness must notice.
  if (algo == Algorithm::kInterleave && backend == BackendKind::kBitset && !run.result.mecs.empty())
    run.result.mecs.pop_back();
#endif
  return run;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f) throw InputError("write to '" + path + "' failed");
}

std::string stats_document(const ExplicitMdp& mdp, Algorithm algo, BackendKind backend,
                           const DecompositionRun& run) {
  std::ostringstream os;
  const OpStats& s = run.stats;
  os << "algo=" << to_string(algo) << "\nbackend=" << to_string(backend) << "\nstates=" << mdp.num_states()
     << "\nactions=" << mdp.num_actions() << "\ntransitions=" << mdp.transitions().size()
     << "\npre_post_ops=" << s.pre_post_ops << "\nexists_ops=" << s.exists_ops
     << "\nsymbolic_ops=" << s.symbolic_ops() << "\nbasic_set_ops=" << s.basic_set_ops
     << "\ncardinality_ops=" << s.cardinality_ops << "\npick_ops=" << s.pick_ops
     << "\nlive_sets_peak=" << s.live_sets_peak << "\nrecursion_depth_peak=" << s.recursion_depth_peak
     << "\nmec_count=" << run.result.mecs.size() << "\nwall_time_ms=" << run.wall_time_ms << '\n';
  return os.str();
}

// ---- benchmark records ------------------------------------------------------

struct BenchRecord {
  std::string instance;
  std::string states, actions, transitions;
  std::string algo, backend;
  std::string wall_time_ms;
  std::string pre_post_ops, exists_ops, basic_set_ops, live_sets_peak, recursion_depth_peak, mec_count;
  std::string status;

  std::string row() const {
    std::ostringstream os;
    os << instance << ',' << states << ',' << actions << ',' << transitions << ',' << algo << ',' << backend
       << ',' << wall_time_ms << ',' << pre_post_ops << ',' << exists_ops << ',' << basic_set_ops << ','
       << live_sets_peak << ',' << recursion_depth_peak << ',' << mec_count << ',' << status;
    return os.str();
  }
};

std::string fmt_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

BenchRecord base_record(const std::string& name, const ExplicitMdp* mdp, Algorithm algo, BackendKind backend) {
  BenchRecord r;
  r.instance = name;
  if (mdp != nullptr) {
    r.states = std::to_string(mdp->num_states());
    r.actions = std::to_string(mdp->num_actions());
    r.transitions = std::to_string(mdp->transitions().size());
  }
  r.algo = std::string(to_string(algo));
  r.backend = std::string(to_string(backend));
  return r;
}

void fill_ok(BenchRecord& r, const DecompositionRun& run) {
  r.wall_time_ms = fmt_ms(run.wall_time_ms);
  r.pre_post_ops = std::to_string(run.stats.pre_post_ops);
  r.exists_ops = std::to_string(run.stats.exists_ops);
  r.basic_set_ops = std::to_string(run.stats.basic_set_ops);
  r.live_sets_peak = std::to_string(run.stats.live_sets_peak);
  r.recursion_depth_peak = std::to_string(run.stats.recursion_depth_peak);
  r.mec_count = std::to_string(run.result.mecs.size());
  r.status = "ok";
}

// ---- commands ---------------------------------------------------------------

struct DecomposeArgs {
  Source src;
  std::string algo = "interleave";
  std::string backend = "bitset";
  std::optional<std::uint64_t> start;
  bool check = false;
  std::string stats;
  std::string output;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  const Algorithm algo = algo_arg(a.algo);
  const BackendKind backend = backend_arg(a.backend);
  const ExplicitMdp mdp = a.src.load();
  DecomposeOptions opts;
  if (a.start) {
    if (*a.start >= mdp.num_states())
      throw UsageError("--start " + std::to_string(*a.start) + " is not a state of the model");
    opts.start = static_cast<StateId>(*a.start);
  }
  std::optional<LemmaChecker> checker;
  if (a.check) {
    checker.emplace(mdp);
    opts.observer = &*checker;
  }
  const DecompositionRun run = run_one(mdp, algo, backend, opts);

  const std::string doc = mec_document(run.result);
  if (a.output.empty())
    out << doc;
  else
    write_file(a.output, doc);
  if (!a.stats.empty()) write_file(a.stats, stats_document(mdp, algo, backend, run));

  if (checker) {
    checker->check_result(run.result);
    if (!checker->violations().empty()) {
      for (const auto& v : checker->violations()) err << "check: " << v << '\n';
      return kExitCheck;
    }
    err << "check: " << checker->checks() << " checks passed\n";
  }
  return kExitOk;
}

struct CompareArgs {
  Source src;
  std::string algos = "basic,interleave";
  std::string backends = "bitset,bdd";
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const auto algos = parse_list<Algorithm>(a.algos, "algorithm", algo_arg);
  const auto backends = parse_list<BackendKind>(a.backends, "backend", backend_arg);
  const ExplicitMdp mdp = a.src.load();

  out << kCsvHeader << '\n';
  std::optional<MecResult> first;
  bool agree = true;
  for (Algorithm algo : algos) {
    for (BackendKind backend : backends) {
      const DecompositionRun run = run_one(mdp, algo, backend, {});
      BenchRecord r = base_record(a.src.label(), &mdp, algo, backend);
      fill_ok(r, run);
      out << r.row() << '\n';
      if (!first)
        first = run.result;
      else if (!(run.result == *first))
        agree = false;
    }
  }
  if (!agree) {
    err << "compare: results differ between configurations\n";
    return kExitCheck;
  }
  err << "compare: all configurations agree\n";
  return kExitOk;
}

struct SccArgs {
  Source src;
  std::string backend = "bitset";
};

int cmd_scc(const SccArgs& a, std::ostream& out, std::ostream&) {
  const BackendKind kind = backend_arg(a.backend);
  const ExplicitMdp mdp = a.src.load();
  auto b = make_backend(kind, mdp.num_states(), mdp.num_actions());
  SymbolicGraph g = b->load_graph(underlying_graph(mdp));
  std::vector<std::vector<StateId>> sccs;
  for (auto& c : skeleton_scc_decomposition(*b, g)) sccs.push_back(b->members(c));
  std::sort(sccs.begin(), sccs.end());
  for (const auto& c : sccs) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
  return kExitOk;
}

struct CheckArgs {
  Source src;
  std::string algo = "interleave";
  std::string backend = "bitset";
};

void describe(std::ostream& os, const char* tag, const Mec& m) {
  os << tag << " mec with states";
  for (StateId s : m.states) os << ' ' << s;
  os << " (" << m.edges.size() << " edges)\n";
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Algorithm algo = algo_arg(a.algo);
  const BackendKind backend = backend_arg(a.backend);
  const ExplicitMdp mdp = a.src.load();
  LemmaChecker checker(mdp);
  DecomposeOptions opts;
  opts.observer = &checker;
  const DecompositionRun run = run_one(mdp, algo, backend, opts);
  const MecResult want = to_mec_result(mdp, oracle_mec_decomp(mdp));
  bool ok = run.result == want;
  if (!ok) {
    for (const Mec& m : want.mecs)
      if (std::find(run.result.mecs.begin(), run.result.mecs.end(), m) == run.result.mecs.end())
        describe(out, "-", m);
    for (const Mec& m : run.result.mecs)
      if (std::find(want.mecs.begin(), want.mecs.end(), m) == want.mecs.end()) describe(out, "+", m);
  }
  for (const auto& v : checker.violations()) {
    out << "violation: " << v << '\n';
    ok = false;
  }
  if (!ok) {
    err << "check: symbolic result disagrees with the explicit decomposition\n";
    return kExitCheck;
  }
  out << "OK\n";
  return kExitOk;
}

struct GenArgs {
  GeneratorParams p;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_gen_random(GenArgs a, std::ostream&, std::ostream&) {
  a.p.seed = a.seed ? *a.seed : default_seed();
  ExplicitMdp mdp = [&] {
    try {
      return generate_random(a.p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  write_file(a.out, serialize_mdp(mdp));
  return kExitOk;
}

struct GenSuiteArgs {
  std::string out;
  std::size_t count = 50;
  std::optional<std::uint64_t> seed;
};

int cmd_gen_suite(const GenSuiteArgs& a, std::ostream& out, std::ostream&) {
  const std::uint64_t base = a.seed ? *a.seed : default_seed();
  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) throw InputError("cannot create '" + a.out + "': " + ec.message());
  for (std::size_t i = 0; i < a.count; ++i) {
    CrossChainParams p;
    p.num_blocks = 4 + i % 8;
    p.block_min = 2;
    p.block_max = 6;
    p.seed = base + i;
    char name[32];
    std::snprintf(name, sizeof name, "desk-%03zu.mdp", i);
    write_file((fs::path(a.out) / name).string(), serialize_mdp(chain_of_sccs_with_cross_edges(p)));
  }
  out << "wrote " << a.count << " instances to " << a.out << '\n';
  return kExitOk;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string csv;
  double timeout_s = 240;
  unsigned jobs = 1;
  std::size_t seed_sweep = 0;
  std::string algos = "basic,interleave";
  std::string backends = "bitset,bdd";
};

struct Instance {
  std::string name;
  std::optional<ExplicitMdp> mdp;
  std::string load_error;
};

// Instance shapes for --seed-sweep, a pure function of the seed.
GeneratorParams sweep_params(std::uint64_t seed) {
  GeneratorParams p;
  p.num_states = 2 + seed % 49;
  p.num_actions = 1 + (seed / 7) % 4;
  p.enable_p = 0.2 + 0.1 * static_cast<double>((seed / 3) % 9);
  p.branch_min = 1;
  p.branch_max = 1 + (seed / 11) % 3;
  p.seed = seed;
  return p;
}

struct Job {
  const Instance* inst;
  Algorithm algo;
  BackendKind backend;
};

BenchRecord run_job(const Job& j, double timeout_s) {
  BenchRecord r = base_record(j.inst->name, j.inst->mdp ? &*j.inst->mdp : nullptr, j.algo, j.backend);
  if (!j.inst->mdp) {
    r.status = "error";
    return r;
  }
  DecomposeOptions opts;
  opts.deadline = Deadline::after(std::chrono::milliseconds(static_cast<std::int64_t>(timeout_s * 1000)));
  try {
    fill_ok(r, run_one(*j.inst->mdp, j.algo, j.backend, opts));
  } catch (const DeadlineExceeded&) {
    r.wall_time_ms = fmt_ms(timeout_s * 1000);
    r.status = "timeout";
  } catch (const std::exception&) {
    r.status = "error";
  }
  return r;
}

struct Worker {
  pid_t pid = -1;
  int fd = -1;
  std::size_t job = 0;
  std::chrono::steady_clock::time_point started;
  std::string buffer;
};

void drain(Worker& w) {
  char buf[4096];
  for (;;) {
    const ssize_t n = ::read(w.fd, buf, sizeof buf);
    if (n <= 0) break;
    w.buffer.append(buf, static_cast<std::size_t>(n));
  }
}

// Each job runs in a forked child: a cooperative deadline inside, a
// SIGKILL watchdog at twice the budget (plus a fixed grace for fork and
// startup) outside.
std::vector<std::string> run_jobs(const std::vector<Job>& jobs, const BenchArgs& a) {
  std::vector<std::string> rows(jobs.size());
  std::vector<Worker> running;
  std::size_t next = 0;
  const auto hard_limit = std::chrono::duration<double>(2 * a.timeout_s + 1.0);
  std::cout.flush();
  std::cerr.flush();

  while (next < jobs.size() || !running.empty()) {
    while (next < jobs.size() && running.size() < a.jobs) {
      int fds[2];
      if (::pipe(fds) != 0) throw std::runtime_error("pipe failed");
      const pid_t pid = ::fork();
      if (pid < 0) throw std::runtime_error("fork failed");
      if (pid == 0) {
        ::close(fds[0]);
        const std::string row = run_job(jobs[next], a.timeout_s).row();
        std::size_t off = 0;
        while (off < row.size()) {
          const ssize_t n = ::write(fds[1], row.data() + off, row.size() - off);
          if (n <= 0) break;
          off += static_cast<std::size_t>(n);
        }
        ::_exit(0);
      }
      ::close(fds[1]);
      running.push_back({pid, fds[0], next, std::chrono::steady_clock::now(), {}});
      ++next;
    }

    std::vector<pollfd> pfds;
    for (const auto& w : running) pfds.push_back({w.fd, POLLIN, 0});
    ::poll(pfds.data(), pfds.size(), 20);

    for (auto it = running.begin(); it != running.end();) {
      Worker& w = *it;
      drain(w);
      int status = 0;
      const pid_t done = ::waitpid(w.pid, &status, WNOHANG);
      const bool overdue = std::chrono::steady_clock::now() - w.started > hard_limit;
      if (done == 0 && !overdue) {
        ++it;
        continue;
      }
      const Job& j = jobs[w.job];
      if (done == 0) {
        ::kill(w.pid, SIGKILL);
        ::waitpid(w.pid, &status, 0);
        BenchRecord r = base_record(j.inst->name, j.inst->mdp ? &*j.inst->mdp : nullptr, j.algo, j.backend);
        r.wall_time_ms = fmt_ms(a.timeout_s * 1000);
        r.status = "timeout";
        rows[w.job] = r.row();
      } else {
        drain(w);
        if (WIFEXITED(status) && WEXITSTATUS(status) == 0 && !w.buffer.empty()) {
          rows[w.job] = w.buffer;
        } else {
          BenchRecord r = base_record(j.inst->name, j.inst->mdp ? &*j.inst->mdp : nullptr, j.algo, j.backend);
          r.status = "error";
          rows[w.job] = r.row();
        }
      }
      ::close(w.fd);
      it = running.erase(it);
    }
  }
  return rows;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  const auto algos = parse_list<Algorithm>(a.algos, "algorithm", algo_arg);
  const auto backends = parse_list<BackendKind>(a.backends, "backend", backend_arg);
  if (a.suite.empty() && a.seed_sweep == 0) throw UsageError("bench needs --suite, --seed-sweep, or both");
  if (!(a.timeout_s > 0)) throw UsageError("--timeout-s must be positive");
  if (a.jobs == 0) throw UsageError("--jobs must be at least 1");

  std::vector<Instance> instances;
  if (!a.suite.empty()) {
    std::error_code ec;
    std::vector<fs::path> files;
    for (fs::directory_iterator it(a.suite, ec), end; !ec && it != end; it.increment(ec))
      if (it->is_regular_file() && it->path().extension() == ".mdp") files.push_back(it->path());
    if (ec) throw InputError("cannot read suite directory '" + a.suite + "': " + ec.message());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Instance inst{f.stem().string(), std::nullopt, {}};
      try {
        inst.mdp = load_mdp_file(f.string());
      } catch (const std::exception& e) {
        inst.load_error = e.what();
      }
      instances.push_back(std::move(inst));
    }
  }
  const std::uint64_t base = a.seed_sweep ? default_seed() : 0;
  for (std::size_t i = 0; i < a.seed_sweep; ++i) {
    const std::uint64_t seed = base + i;
    instances.push_back({"sweep-" + std::to_string(seed), generate_random(sweep_params(seed)), {}});
  }

  std::vector<Job> jobs;
  for (const auto& inst : instances)
    for (Algorithm algo : algos)
      for (BackendKind backend : backends) jobs.push_back({&inst, algo, backend});

  const std::vector<std::string> rows = run_jobs(jobs, a);
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (const auto& r : rows) csv << r << '\n';
  write_file(a.csv, csv.str());

  std::size_t ok = 0;
  for (const auto& r : rows) ok += r.size() >= 3 && r.compare(r.size() - 3, 3, ",ok") == 0;
  out << "bench: " << rows.size() << " rows (" << ok << " ok) written to " << a.csv << '\n';
  for (const auto& inst : instances)
    if (!inst.load_error.empty()) out << "bench: " << inst.name << ": " << inst.load_error << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic maximal end component decomposition"};
  app.name("mecdec");
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "decompose an MDP into its MECs");
  dec.src.add_to(c_dec);
  c_dec->add_option("--algo", dec.algo, "basic or interleave")->capture_default_str();
  c_dec->add_option("--backend", dec.backend, "bitset or bdd")->capture_default_str();
  c_dec->add_option("--start", dec.start, "start state of the top-level call");
  c_dec->add_flag("--check", dec.check, "run lemma and result checks against the explicit oracle");
  c_dec->add_option("--stats", dec.stats, "write key=value operation statistics to this file");
  c_dec->add_option("--output,-o", dec.output, "write the MEC document here instead of stdout");

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "run several algorithm/backend pairs and compare");
  cmp.src.add_to(c_cmp);
  c_cmp->add_option("--algos", cmp.algos, "comma-separated algorithms")->capture_default_str();
  c_cmp->add_option("--backends", cmp.backends, "comma-separated backends")->capture_default_str();

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "benchmark a suite and write CSV");
  c_bench->add_option("--suite", bench.suite, "directory of .mdp files");
  c_bench->add_option("--csv", bench.csv, "output CSV")->required();
  c_bench->add_option("--timeout-s", bench.timeout_s, "per-run time budget in seconds")->capture_default_str();
  c_bench->add_option("--jobs,-j", bench.jobs, "parallel workers")->capture_default_str();
  c_bench->add_option("--seed-sweep", bench.seed_sweep, "add N random instances seeded from MECDEC_SEED");
  c_bench->add_option("--algos", bench.algos, "comma-separated algorithms")->capture_default_str();
  c_bench->add_option("--backends", bench.backends, "comma-separated backends")->capture_default_str();

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen-random", "write a random MDP");
  c_gen->add_option("--states", gen.p.num_states)->required();
  c_gen->add_option("--actions", gen.p.num_actions)->required();
  c_gen->add_option("--enable-p", gen.p.enable_p)->capture_default_str();
  c_gen->add_option("--branch-min", gen.p.branch_min)->capture_default_str();
  c_gen->add_option("--branch-max", gen.p.branch_max)->capture_default_str();
  c_gen->add_option("--seed", gen.seed, "defaults to MECDEC_SEED, else 0");
  c_gen->add_option("--out", gen.out)->required();

  GenSuiteArgs suite;
  auto* c_suite = app.add_subcommand("gen-suite", "write the cross-chain desk suite");
  c_suite->add_option("--out", suite.out)->required();
  c_suite->add_option("--count", suite.count)->capture_default_str();
  c_suite->add_option("--seed", suite.seed, "defaults to MECDEC_SEED, else 0");

  SccArgs scc;
  auto* c_scc = app.add_subcommand("scc", "print the SCCs of the underlying graph");
  scc.src.add_to(c_scc);
  c_scc->add_option("--backend", scc.backend)->capture_default_str();

  CheckArgs chk;
  auto* c_chk = app.add_subcommand("check", "compare a symbolic run with the explicit oracle");
  chk.src.add_to(c_chk);
  c_chk->add_option("--algo", chk.algo)->capture_default_str();
  c_chk->add_option("--backend", chk.backend)->capture_default_str();

  std::vector<std::string> argv_store;
  argv_store.push_back("mecdec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_dec->parsed()) return cmd_decompose(dec, out, err);
    if (c_cmp->parsed()) return cmd_compare(cmp, out, err);
    if (c_bench->parsed()) return cmd_bench(bench, out, err);
    if (c_gen->parsed()) return cmd_gen_random(gen, out, err);
    if (c_suite->parsed()) return cmd_gen_suite(suite, out, err);
    if (c_scc->parsed()) return cmd_scc(scc, out, err);
    if (c_chk->parsed()) return cmd_check(chk, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace mecdec::cli
