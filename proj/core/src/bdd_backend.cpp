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

#include "mecdec/bdd_backend.hpp"

#include <algorithm>
#include <bit>

namespace mecdec {

namespace {

constexpr std::size_t kInitialGcThreshold = std::size_t{1} << 20;

unsigned bits_for(std::size_t count) {
  return std::max(1u, static_cast<unsigned>(std::bit_width(count > 0 ? count - 1 : 0)));
}

}  // namespace

BddBackend::BddBackend(std::size_t num_states, std::size_t num_actions)
    : SymbolicBackend(num_states, num_actions),
      state_bits_(bits_for(num_states)),
      action_bits_(bits_for(num_actions)),
      manager_(2 * state_bits_ + action_bits_),
      gc_threshold_(kInitialGcThreshold) {
  const unsigned t = state_bits_;
  const unsigned l = action_bits_;
  std::vector<unsigned> next_vars, action_vars;
  for (unsigned i = 0; i < t; ++i) {
    x_vars_.push_back(2 * i);
    next_vars.push_back(2 * i + 1);
  }
  for (unsigned j = 0; j < l; ++j) action_vars.push_back(2 * t + j);

  pair_vars_ = x_vars_;
  pair_vars_.insert(pair_vars_.end(), action_vars.begin(), action_vars.end());
  for (unsigned v = 0; v < 2 * t + l; ++v) edge_vars_.push_back(v);

  std::vector<unsigned> up(2 * t + l), down(2 * t + l);
  for (unsigned v = 0; v < 2 * t + l; ++v) up[v] = down[v] = v;
  for (unsigned i = 0; i < t; ++i) {
    up[2 * i] = 2 * i + 1;
    down[2 * i + 1] = 2 * i;
  }
  to_next_ = manager_.register_renaming(std::move(up));
  to_current_ = manager_.register_renaming(std::move(down));

  cube_next_ = manager_.cube(next_vars);
  std::vector<unsigned> xa = pair_vars_;
  cube_current_and_action_ = manager_.cube(xa);
  std::vector<unsigned> an = action_vars;
  an.insert(an.end(), next_vars.begin(), next_vars.end());
  cube_action_and_next_ = manager_.cube(an);
}

BddBackend::Slot BddBackend::store(bdd::NodeId f) {
  const Slot s = acquire_slot();
  if (roots_.size() <= s) roots_.resize(s + 1, bdd::kFalse);
  roots_[s] = f;
  return s;
}

void BddBackend::free_payload(Slot s) { roots_[s] = bdd::kFalse; }

void BddBackend::before_operation() {
  if (manager_.live_nodes() < gc_threshold_) return;
  std::vector<bdd::NodeId> roots = {cube_next_, cube_current_and_action_, cube_action_and_next_};
  for_each_live_slot([&](Slot s) { roots.push_back(roots_[s]); });
  manager_.collect_garbage(roots);
  gc_threshold_ = std::max(kInitialGcThreshold, 2 * manager_.live_nodes());
}

std::uint64_t BddBackend::encode_edge(const Edge& e) const noexcept {
  std::uint64_t key = 0;
  for (unsigned i = 0; i < state_bits_; ++i) {
    const unsigned shift = state_bits_ - 1 - i;
    key = (key << 1) | ((e.src >> shift) & 1u);
    key = (key << 1) | ((e.dst >> shift) & 1u);
  }
  return (key << action_bits_) | e.label;
}

Edge BddBackend::decode_edge(std::uint64_t key) const noexcept {
  Edge e;
  e.label = static_cast<ActionId>(key & ((std::uint64_t{1} << action_bits_) - 1));
  key >>= action_bits_;
  for (unsigned i = 0; i < state_bits_; ++i) {
    e.dst |= static_cast<StateId>(key & 1u) << i;
    key >>= 1;
    e.src |= static_cast<StateId>(key & 1u) << i;
    key >>= 1;
  }
  return e;
}

BddBackend::Slot BddBackend::do_vertices(std::span<const StateId> ids) {
  std::vector<std::uint64_t> keys(ids.begin(), ids.end());
  return store(manager_.from_minterms(keys, x_vars_));
}

BddBackend::Slot BddBackend::do_pairs(std::span<const StatePair> pairs) {
  std::vector<std::uint64_t> keys;
  keys.reserve(pairs.size());
  for (const auto& p : pairs) keys.push_back((std::uint64_t{p.state} << action_bits_) | p.action);
  return store(manager_.from_minterms(keys, pair_vars_));
}

BddBackend::Slot BddBackend::do_relation(std::span<const Edge> edges) {
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) keys.push_back(encode_edge(e));
  std::sort(keys.begin(), keys.end());
  return store(manager_.from_minterms(keys, edge_vars_));
}

BddBackend::Slot BddBackend::do_copy(Slot s) { return store(node(s)); }

BddBackend::Slot BddBackend::do_pre(Slot u, Slot e) {
  const bdd::NodeId target = manager_.rename(node(u), to_next_);
  return store(manager_.and_exists(node(e), target, cube_action_and_next_));
}

BddBackend::Slot BddBackend::do_post(Slot u, Slot e) {
  const bdd::NodeId image = manager_.and_exists(node(e), node(u), cube_current_and_action_);
  return store(manager_.rename(image, to_current_));
}

BddBackend::Slot BddBackend::do_pairs_into(Slot targets, Slot e) {
  const bdd::NodeId t = manager_.rename(node(targets), to_next_);
  return store(manager_.and_exists(node(e), t, cube_next_));
}

BddBackend::Slot BddBackend::do_states_with_pair_outside(Slot x, Slot e) {
  const bdd::NodeId outside = manager_.apply_diff(node(e), node(x));
  return store(manager_.exists(outside, cube_action_and_next_));
}

BddBackend::Slot BddBackend::do_enabled_pairs(Slot e) { return store(manager_.exists(node(e), cube_next_)); }

BddBackend::Slot BddBackend::do_vertex_union(Slot a, Slot b) {
  return store(manager_.apply_or(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_vertex_intersect(Slot a, Slot b) {
  return store(manager_.apply_and(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_vertex_diff(Slot a, Slot b) {
  return store(manager_.apply_diff(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_pair_union(Slot a, Slot b) {
  return store(manager_.apply_or(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_pair_intersect(Slot a, Slot b) {
  return store(manager_.apply_and(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_pair_diff(Slot a, Slot b) {
  return store(manager_.apply_diff(node(a), node(b)));
}
BddBackend::Slot BddBackend::do_restrict_pairs(Slot x, Slot u) {
  return store(manager_.apply_and(node(x), node(u)));
}
BddBackend::Slot BddBackend::do_remove_pairs(Slot e, Slot x) {
  return store(manager_.apply_diff(node(e), node(x)));
}
BddBackend::Slot BddBackend::do_restrict(Slot e, Slot u) {
  const bdd::NodeId src = manager_.apply_and(node(e), node(u));
  const bdd::NodeId dst = manager_.rename(node(u), to_next_);
  return store(manager_.apply_and(src, dst));
}

StateId BddBackend::do_pick(Slot u) const {
  return static_cast<StateId>(manager_.min_minterm(node(u), x_vars_));
}

std::size_t BddBackend::do_cardinality(Slot u) const {
  return static_cast<std::size_t>(manager_.sat_count(node(u), x_vars_));
}

bool BddBackend::do_is_empty(Slot s) const { return node(s) == bdd::kFalse; }

bool BddBackend::do_equal(Slot a, Slot b) const { return node(a) == node(b); }

bool BddBackend::do_contains(Slot u, StateId v) const {
  bdd::NodeId f = node(u);
  while (f != bdd::kFalse && f != bdd::kTrue) {
    const unsigned var = manager_.top_var(f);
    const unsigned bit = (v >> (state_bits_ - 1 - var / 2)) & 1u;
    f = bit ? manager_.high(f) : manager_.low(f);
  }
  return f == bdd::kTrue;
}

std::vector<StateId> BddBackend::do_vertex_members(Slot u) const {
  std::vector<StateId> out;
  for (std::uint64_t k : manager_.minterms(node(u), x_vars_)) out.push_back(static_cast<StateId>(k));
  return out;
}

std::vector<StatePair> BddBackend::do_pair_members(Slot x) const {
  std::vector<StatePair> out;
  const std::uint64_t mask = (std::uint64_t{1} << action_bits_) - 1;
  for (std::uint64_t k : manager_.minterms(node(x), pair_vars_))
    out.push_back({static_cast<StateId>(k >> action_bits_), static_cast<ActionId>(k & mask)});
  return out;
}

std::vector<Edge> BddBackend::do_edge_members(Slot e) const {
  std::vector<Edge> out;
  for (std::uint64_t k : manager_.minterms(node(e), edge_vars_)) out.push_back(decode_edge(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mecdec
