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

#include "mecdec/mec_engine.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <ostream>
#include <sstream>

#include "mecdec/reachability.hpp"

namespace mecdec {

PairSet rout(SymbolicBackend& b, const VertexSet& u, const SymbolicGraph& g) {
  VertexSet outside = b.complement_within(u, g.vertices);
  PairSet into = b.pairs_into(outside, g.edges);
  return b.restrict_pairs(into, u);
}

AttrResult attr(SymbolicBackend& b, const PairSet& x, const SymbolicGraph& g) {
  VertexSet u0 = b.make_vertices({});
  PairSet x0 = b.make_pairs({});
  VertexSet u1 = b.make_vertices({});
  PairSet x1 = b.copy(x);
  while (!b.equal(u1, u0) || !b.equal(x1, x0)) {
    u0 = std::move(u1);
    x0 = std::move(x1);
    // States all of whose pairs are already absorbed.
    VertexSet keep = b.states_with_pair_outside(x0, g.edges);
    VertexSet doomed = b.complement_within(keep, g.vertices);
    keep.reset();
    u1 = b.unite(u0, doomed);
    doomed.reset();
    PairSet reaching = b.pairs_into(u0, g.edges);
    x1 = b.unite(x0, reaching);
  }
  return {std::move(u1), std::move(x1)};
}

void MecResult::canonicalize() {
  for (auto& m : mecs) {
    std::sort(m.states.begin(), m.states.end());
    std::sort(m.edges.begin(), m.edges.end());
  }
  std::sort(mecs.begin(), mecs.end(), [](const Mec& a, const Mec& b) {
    if (a.states.empty() || b.states.empty()) return a.states.size() < b.states.size();
    return a.states.front() < b.states.front();
  });
}

void write_mec_document(std::ostream& out, const MecResult& r) {
  for (std::size_t k = 0; k < r.mecs.size(); ++k) {
    const Mec& m = r.mecs[k];
    out << "mec " << k << '\n' << 's';
    for (StateId s : m.states) out << ' ' << s;
    out << '\n';
    for (const Edge& e : m.edges) out << "e " << e.src << ' ' << e.label << ' ' << e.dst << '\n';
  }
}

std::string mec_document(const MecResult& r) {
  std::ostringstream os;
  write_mec_document(os, r);
  return os.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > j) words.push_back(line.substr(j, i - j));
  }
  return words;
}

std::uint32_t to_id(std::string_view w, std::size_t line) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || p != w.data() + w.size())
    throw ParseError(line, 1, "expected a non-negative integer, got '" + std::string(w) + "'");
  return v;
}

}  // namespace

MecResult parse_mec_document(std::string_view text) {
  MecResult r;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto w = split_words(line);
    if (w.empty()) continue;
    if (w[0] == "mec") {
      if (w.size() != 2) throw ParseError(line_no, 1, "mec header takes one index");
      to_id(w[1], line_no);
      r.mecs.emplace_back();
      continue;
    }
    if (r.mecs.empty()) throw ParseError(line_no, 1, "content before the first mec header");
    if (w[0] == "s") {
      for (std::size_t i = 1; i < w.size(); ++i) r.mecs.back().states.push_back(to_id(w[i], line_no));
    } else if (w[0] == "e") {
      if (w.size() != 4) throw ParseError(line_no, 1, "edge line needs source, action and target");
      r.mecs.back().edges.push_back({to_id(w[1], line_no), to_id(w[2], line_no), to_id(w[3], line_no)});
    } else {
      throw ParseError(line_no, 1, "unknown keyword '" + std::string(w[0]) + "'");
    }
  }
  return r;
}

namespace {

struct Task {
  SymbolicGraph g;
  std::optional<StateId> start;
  std::size_t size = 0;
};

class Engine {
 public:
  Engine(SymbolicBackend& b, const DecomposeOptions& opts) : b_(b), opts_(opts) {}

  MecResult run(Algorithm algo, const SymbolicGraph& g) {
    SymbolicGraph top{b_.copy(g.vertices), b_.copy(g.edges)};
    if (!b_.is_empty(top.vertices)) {
      if (algo == Algorithm::kBasic)
        basic(std::move(top), opts_.start);
      else
        interleave(std::move(top), opts_.start);
    }
    out_.canonicalize();
    return std::move(out_);
  }

 private:
  void emit(const VertexSet& states, const Relation& edges) {
    out_.mecs.push_back({b_.members(states), b_.members(edges)});
  }

  void child(const SymbolicGraph& parent, const SymbolicGraph& c) {
    if (opts_.observer) opts_.observer->on_subproblem(b_, parent, c);
  }

  void removed(const AttrResult& a) {
    if (opts_.observer) opts_.observer->on_removed(b_, a.states, a.pairs);
  }

  // Drops the attractor of ROut(part) and returns what is left of part.
  std::optional<Task> trim(VertexSet part, const SymbolicGraph& g, bool emit_if_closed) {
    PairSet out = rout(b_, part, g);
    AttrResult a = attr(b_, out, g);
    out.reset();
    if (b_.is_empty(a.pairs)) {
      assert(b_.is_empty(a.states));
      if (emit_if_closed) {
        Relation e = b_.restrict(g.edges, part);
        emit(part, e);
        return std::nullopt;
      }
    } else {
      removed(a);
    }
    VertexSet rest = b_.subtract(part, a.states);
    part.reset();
    if (b_.is_empty(rest)) return std::nullopt;
    Relation pruned = b_.remove_pairs(g.edges, a.pairs);
    a = {};
    Relation e = b_.restrict(pruned, rest);
    return Task{{std::move(rest), std::move(e)}, std::nullopt};
  }

  void interleave(SymbolicGraph g, std::optional<StateId> start) {
    auto frame = b_.frame();
    for (;;) {
      opts_.deadline.check();
      const StateId v = start ? *start : b_.pick(g.vertices);
      SccResult r = scc_fwd_new_start(b_, v, g);

      std::vector<Task> tasks;
      VertexSet rest = b_.subtract(r.fwd, r.scc);
      VertexSet outside = b_.complement_within(r.fwd, g.vertices);
      r.fwd.reset();

      if (auto t = trim(std::move(r.scc), g, true)) tasks.push_back(std::move(*t));

      if (!b_.is_empty(rest)) {
        if (opts_.observer) opts_.observer->on_forward_remainder(b_, rest, g);
        std::optional<StateId> s;
        if (b_.contains(rest, r.new_start)) s = r.new_start;
        Relation e = b_.restrict(g.edges, rest);
        tasks.push_back({{std::move(rest), std::move(e)}, s});
      }
      rest.reset();

      if (!b_.is_empty(outside)) {
        if (auto t = trim(std::move(outside), g, false)) tasks.push_back(std::move(*t));
      }
      outside.reset();

      for (const auto& t : tasks) child(g, t.g);
      g = {};
      if (tasks.empty()) return;

      for (auto& t : tasks) t.size = b_.cardinality(t.g.vertices);
      std::stable_sort(tasks.begin(), tasks.end(), [](const Task& x, const Task& y) { return x.size < y.size; });
      for (std::size_t i = 0; i + 1 < tasks.size(); ++i) {
        interleave(std::move(tasks[i].g), tasks[i].start);
        tasks[i].g = {};
      }
      g = std::move(tasks.back().g);
      start = tasks.back().start;
    }
  }

  void basic(SymbolicGraph g, std::optional<StateId> start) {
    auto frame = b_.frame();
    opts_.deadline.check();
    for_each_scc(
        b_, g, start,
        [&](VertexSet&& c) {
          VertexSet scc = std::move(c);
          PairSet out = rout(b_, scc, g);
          if (b_.is_empty(out)) {
            Relation e = b_.restrict(g.edges, scc);
            emit(scc, e);
            return;
          }
          AttrResult a = attr(b_, out, g);
          out.reset();
          removed(a);
          VertexSet rest = b_.subtract(scc, a.states);
          scc.reset();
          if (b_.is_empty(rest)) return;
          Relation pruned = b_.remove_pairs(g.edges, a.pairs);
          a = {};
          Relation e = b_.restrict(pruned, rest);
          pruned.reset();
          SymbolicGraph sub{std::move(rest), std::move(e)};
          child(g, sub);
          basic(std::move(sub), std::nullopt);
        },
        opts_.deadline);
  }

  SymbolicBackend& b_;
  const DecomposeOptions& opts_;
  MecResult out_;
};

}  // namespace

MecResult mec_decomp_basic(SymbolicBackend& b, const SymbolicGraph& g, const DecomposeOptions& opts) {
  return Engine(b, opts).run(Algorithm::kBasic, g);
}

MecResult mec_decomp_interleave(SymbolicBackend& b, const SymbolicGraph& g, const DecomposeOptions& opts) {
  return Engine(b, opts).run(Algorithm::kInterleave, g);
}

std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::kBasic ? "basic" : "interleave";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "basic") return Algorithm::kBasic;
  if (text == "interleave") return Algorithm::kInterleave;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected basic or interleave)");
}

DecompositionRun decompose_with_stats(const ExplicitMdp& mdp, Algorithm algo, BackendKind backend,
                                      const DecomposeOptions& opts) {
  auto b = make_backend(backend, mdp.num_states(), mdp.num_actions());
  SymbolicGraph g = b->load_graph(underlying_graph(mdp));
  const auto t0 = std::chrono::steady_clock::now();
  DecompositionRun run;
  run.result = algo == Algorithm::kBasic ? mec_decomp_basic(*b, g, opts) : mec_decomp_interleave(*b, g, opts);
  const auto t1 = std::chrono::steady_clock::now();
  run.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  run.stats = b->stats();
  return run;
}

}  // namespace mecdec
