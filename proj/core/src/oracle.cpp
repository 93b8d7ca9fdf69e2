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

#include "mecdec/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mecdec {

namespace {

using Adjacency = std::vector<std::vector<StateId>>;

std::vector<std::vector<StateId>> tarjan(std::size_t n, const Adjacency& adj, const std::vector<bool>& alive) {
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::vector<std::pair<StateId, std::size_t>> call;  // (vertex, next child)
  std::vector<std::vector<StateId>> out;
  std::uint32_t counter = 0;

  for (StateId root = 0; root < n; ++root) {
    if (!alive[root] || index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        const StateId w = adj[v][i++];
        if (!alive[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const StateId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<StateId> comp;
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// successors[s][a] = sorted destinations; empty when a is not enabled at s.
using Successors = std::vector<std::vector<std::vector<StateId>>>;

Successors successors_of(const ExplicitMdp& mdp) {
  Successors succ(mdp.num_states(), std::vector<std::vector<StateId>>(mdp.num_actions()));
  for (const auto& t : mdp.transitions()) succ[t.src][t.act].push_back(t.dst);
  for (auto& row : succ)
    for (auto& d : row) std::sort(d.begin(), d.end());
  return succ;
}

}  // namespace

std::vector<std::vector<StateId>> tarjan_scc(const ExplicitGraph& g) {
  Adjacency adj(g.num_vertices);
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);
  return tarjan(g.num_vertices, adj, std::vector<bool>(g.num_vertices, true));
}

ExplicitMecSet oracle_mec_decomp(const ExplicitMdp& mdp) {
  const std::size_t n = mdp.num_states();
  const std::size_t k = mdp.num_actions();
  const Successors succ = successors_of(mdp);
  ExplicitMecSet result;

  std::vector<std::vector<StateId>> work;
  {
    std::vector<StateId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<StateId>(i);
    work.push_back(std::move(all));
  }
  std::vector<bool> in_set(n, false);
  std::vector<std::vector<ActionId>> allowed(n);

  while (!work.empty()) {
    std::vector<StateId> cand = std::move(work.back());
    work.pop_back();
    for (StateId s : cand) in_set[s] = true;

    // Prune to a fixed point: drop actions leaving cand, then states with no action left.
    bool changed = true;
    while (changed) {
      changed = false;
      for (StateId s : cand) {
        allowed[s].clear();
        for (ActionId a = 0; a < k; ++a) {
          const auto& d = succ[s][a];
          if (d.empty()) continue;
          if (std::all_of(d.begin(), d.end(), [&](StateId t) { return in_set[t]; })) allowed[s].push_back(a);
        }
      }
      std::vector<StateId> kept;
      for (StateId s : cand) {
        if (allowed[s].empty()) {
          in_set[s] = false;
          changed = true;
        } else {
          kept.push_back(s);
        }
      }
      cand = std::move(kept);
    }

    if (!cand.empty()) {
      Adjacency adj(n);
      for (StateId s : cand)
        for (ActionId a : allowed[s])
          for (StateId t : succ[s][a]) adj[s].push_back(t);
      auto comps = tarjan(n, adj, in_set);
      if (comps.size() == 1) {
        ExplicitMec m;
        m.states = cand;
        std::sort(m.states.begin(), m.states.end());
        for (StateId s : m.states)
          for (ActionId a : allowed[s]) m.pairs.push_back({s, a});
        result.mecs.push_back(std::move(m));
      } else {
        for (auto& c : comps) work.push_back(std::move(c));
      }
    }
    for (StateId s : cand) in_set[s] = false;
  }

  std::sort(result.mecs.begin(), result.mecs.end(),
            [](const ExplicitMec& a, const ExplicitMec& b) { return a.states.front() < b.states.front(); });
  return result;
}

MecResult to_mec_result(const ExplicitMdp& mdp, const ExplicitMecSet& mecs) {
  const Successors succ = successors_of(mdp);
  MecResult r;
  for (const auto& m : mecs.mecs) {
    Mec out;
    out.states = m.states;
    for (const auto& p : m.pairs)
      for (StateId t : succ[p.state][p.action]) out.edges.push_back({p.state, p.action, t});
    r.mecs.push_back(std::move(out));
  }
  r.canonicalize();
  return r;
}

Verdict verify_mec_result(const ExplicitMdp& mdp, const MecResult& r) {
  Verdict v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  const std::size_t n = mdp.num_states();
  const Successors succ = successors_of(mdp);
  std::vector<int> owner(n, -1);

  for (std::size_t i = 0; i < r.mecs.size(); ++i) {
    const Mec& m = r.mecs[i];
    const std::string tag = "mec " + std::to_string(i) + ": ";
    if (m.states.empty()) {
      fail(tag + "no states");
      continue;
    }
    if (m.edges.empty()) fail(tag + "no edges");
    bool ids_ok = true;
    for (StateId s : m.states) {
      if (s >= n) {
        fail(tag + "state " + std::to_string(s) + " out of range");
        ids_ok = false;
        continue;
      }
      if (owner[s] >= 0 && owner[s] != static_cast<int>(i))
        fail(tag + "state " + std::to_string(s) + " also in mec " + std::to_string(owner[s]));
      owner[s] = static_cast<int>(i);
    }
    if (!ids_ok) continue;
    std::set<StateId> members(m.states.begin(), m.states.end());

    // Closure: every listed pair keeps all its successors inside, and lists all of them.
    std::map<StatePair, std::vector<StateId>> by_pair;
    bool edges_ok = true;
    for (const Edge& e : m.edges) {
      if (e.src >= n || e.dst >= n || e.label >= mdp.num_actions() ||
          !std::binary_search(succ[e.src][e.label].begin(), succ[e.src][e.label].end(), e.dst)) {
        fail(tag + "edge (" + std::to_string(e.src) + "," + std::to_string(e.label) + "," +
             std::to_string(e.dst) + ") is not a transition");
        edges_ok = false;
        continue;
      }
      if (!members.count(e.src) || !members.count(e.dst)) {
        fail(tag + "edge leaves the state set");
        edges_ok = false;
      }
      by_pair[{e.src, e.label}].push_back(e.dst);
    }
    if (!edges_ok) continue;
    std::set<StateId> with_action;
    for (auto& [p, dsts] : by_pair) {
      std::sort(dsts.begin(), dsts.end());
      if (dsts != succ[p.state][p.action])
        fail(tag + "pair (" + std::to_string(p.state) + "," + std::to_string(p.action) + ") can leave the component");
      with_action.insert(p.state);
    }
    for (StateId s : m.states)
      if (!with_action.count(s)) fail(tag + "state " + std::to_string(s) + " has no action");

    ExplicitGraph sub{n, mdp.num_actions(), m.edges};
    const auto comps = tarjan_scc(sub);
    const bool connected = std::any_of(comps.begin(), comps.end(),
                                       [&](const std::vector<StateId>& c) { return c == m.states; });
    if (!connected) fail(tag + "not strongly connected");
  }

  MecResult sorted = r;
  sorted.canonicalize();
  if (!(sorted == to_mec_result(mdp, oracle_mec_decomp(mdp)))) fail("result differs from the explicit decomposition");
  return v;
}

LemmaChecker::LemmaChecker(const ExplicitMdp& mdp)
    : mdp_(mdp), mec_of_state_(mdp.num_states(), -1),
      pair_in_mec_(mdp.num_states(), std::vector<bool>(mdp.num_actions(), false)) {
  const ExplicitMecSet mecs = oracle_mec_decomp(mdp);
  for (std::size_t i = 0; i < mecs.mecs.size(); ++i) {
    for (StateId s : mecs.mecs[i].states) mec_of_state_[s] = static_cast<int>(i);
    for (const auto& p : mecs.mecs[i].pairs) pair_in_mec_[p.state][p.action] = true;
  }
}

namespace {

std::size_t pair_count(const std::vector<Edge>& edges) {
  std::set<StatePair> pairs;
  for (const Edge& e : edges) pairs.insert({e.src, e.label});
  return pairs.size();
}

}  // namespace

void LemmaChecker::on_subproblem(const SymbolicBackend& b, const SymbolicGraph& parent,
                                 const SymbolicGraph& child) {
  ++checks_;
  const std::size_t ps = b.members(parent.vertices).size();
  const std::size_t cs = b.members(child.vertices).size();
  const std::size_t pp = pair_count(b.members(parent.edges));
  const std::size_t cp = pair_count(b.members(child.edges));
  if (!(cs < ps || cp < pp))
    violations_.push_back("progress: subproblem with " + std::to_string(cs) + " states and " +
                          std::to_string(cp) + " pairs does not shrink its parent");
}

void LemmaChecker::on_forward_remainder(const SymbolicBackend& b, const VertexSet& rest,
                                        const SymbolicGraph& g) {
  ++checks_;
  const auto ids = b.members(rest);
  std::vector<bool> in(mdp_.num_states(), false);
  for (StateId s : ids) in[s] = true;
  for (const Edge& e : b.members(g.edges)) {
    if (in[e.src] && !in[e.dst]) {
      violations_.push_back("forward remainder: pair (" + std::to_string(e.src) + "," +
                            std::to_string(e.label) + ") leaves F \\ C");
      return;
    }
  }
}

void LemmaChecker::on_removed(const SymbolicBackend& b, const VertexSet& states, const PairSet& pairs) {
  ++checks_;
  for (StateId s : b.members(states))
    if (mec_of_state_[s] >= 0)
      violations_.push_back("removal: state " + std::to_string(s) + " belongs to an MEC");
  for (const StatePair& p : b.members(pairs))
    if (pair_in_mec_[p.state][p.action])
      violations_.push_back("removal: pair (" + std::to_string(p.state) + "," + std::to_string(p.action) +
                            ") belongs to an MEC");
}

void LemmaChecker::check_result(const MecResult& r) {
  ++checks_;
  Verdict v = verify_mec_result(mdp_, r);
  for (auto& s : v.violations) violations_.push_back("result: " + s);
}

}  // namespace mecdec
