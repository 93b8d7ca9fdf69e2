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

// Slow reference computations over explicit edge lists, for tests only.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "mecdec/explicit_mdp.hpp"
#include "mecdec/generators.hpp"

namespace mecdec::testing {

using IdSet = std::set<StateId>;
using PairSetX = std::set<StatePair>;

inline IdSet ids_of(const std::vector<StateId>& v) { return {v.begin(), v.end()}; }

inline IdSet pre_of(const std::vector<Edge>& edges, const IdSet& u) {
  IdSet out;
  for (const Edge& e : edges)
    if (u.count(e.dst)) out.insert(e.src);
  return out;
}

inline IdSet post_of(const std::vector<Edge>& edges, const IdSet& u) {
  IdSet out;
  for (const Edge& e : edges)
    if (u.count(e.src)) out.insert(e.dst);
  return out;
}

inline IdSet bfs(const std::vector<Edge>& edges, StateId v) {
  IdSet seen{v};
  std::deque<StateId> q{v};
  while (!q.empty()) {
    const StateId s = q.front();
    q.pop_front();
    for (const Edge& e : edges)
      if (e.src == s && seen.insert(e.dst).second) q.push_back(e.dst);
  }
  return seen;
}

/// SCC of v: forward set intersected with backward set.
inline IdSet scc_of(const std::vector<Edge>& edges, StateId v) {
  const IdSet fwd = bfs(edges, v);
  std::vector<Edge> rev;
  for (const Edge& e : edges) rev.push_back({e.dst, e.label, e.src});
  const IdSet bwd = bfs(rev, v);
  IdSet out;
  std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(), std::inserter(out, out.end()));
  return out;
}

/// All SCCs by repeated scc_of, as a set of sets.
inline std::set<IdSet> all_sccs(std::size_t n, const std::vector<Edge>& edges) {
  std::set<IdSet> out;
  std::vector<bool> done(n, false);
  for (StateId v = 0; v < n; ++v) {
    if (done[v]) continue;
    IdSet c = scc_of(edges, v);
    for (StateId s : c) done[s] = true;
    out.insert(std::move(c));
  }
  return out;
}

/// Pairs of U with at least one successor outside U.
inline PairSetX rout_scan(const std::vector<Edge>& edges, const IdSet& u) {
  PairSetX out;
  for (const Edge& e : edges)
    if (u.count(e.src) && !u.count(e.dst)) out.insert({e.src, e.label});
  return out;
}

/// Attractor by naive iteration to a fixed point over the edge list.
inline std::pair<IdSet, PairSetX> attr_scan(const std::vector<Edge>& edges, const IdSet& vertices, PairSetX x) {
  IdSet u;
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s : vertices) {
      if (u.count(s)) continue;
      bool all = true;
      for (const Edge& e : edges)
        if (e.src == s && !x.count({e.src, e.label})) all = false;
      if (all) {
        u.insert(s);
        changed = true;
      }
    }
    for (const Edge& e : edges)
      if (u.count(e.dst) && x.insert({e.src, e.label}).second) changed = true;
  }
  return {u, x};
}

/// Random MDP drawn from a spread of shapes; states <= 50, actions <= 4.
inline ExplicitMdp random_mdp(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeneratorParams p;
  p.num_states = 1 + rng() % 50;
  p.num_actions = 1 + rng() % 4;
  p.enable_p = 0.15 + 0.85 * static_cast<double>(rng() % 1000) / 1000.0;
  p.branch_min = 1;
  p.branch_max = 1 + rng() % 4;
  p.seed = seed;
  return generate_random(p);
}

/// Random subset of [0, n).
inline std::vector<StateId> random_subset(std::mt19937_64& rng, std::size_t n) {
  std::vector<StateId> out;
  for (StateId s = 0; s < n; ++s)
    if (rng() % 2) out.push_back(s);
  return out;
}

}  // namespace mecdec::testing
