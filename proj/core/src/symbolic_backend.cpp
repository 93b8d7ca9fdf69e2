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

#include "mecdec/symbolic_backend.hpp"

#include <algorithm>
#include <string>

#include "mecdec/bdd_backend.hpp"
#include "mecdec/bitset_backend.hpp"

namespace mecdec {

SymbolicBackend::SymbolicBackend(std::size_t num_states, std::size_t num_actions)
    : num_states_(num_states), num_actions_(num_actions) {}

SymbolicBackend::~SymbolicBackend() = default;

SymbolicBackend::Slot SymbolicBackend::acquire_slot() {
  Slot s;
  if (!free_slots_.empty()) {
    s = free_slots_.back();
    free_slots_.pop_back();
    slot_live_[s] = true;
  } else {
    s = static_cast<Slot>(slot_live_.size());
    slot_live_.push_back(true);
  }
  ++stats_.live_sets_current;
  stats_.live_sets_peak = std::max(stats_.live_sets_peak, stats_.live_sets_current);
  return s;
}

void SymbolicBackend::release(Slot s) noexcept {
  free_payload(s);
  slot_live_[s] = false;
  free_slots_.push_back(s);
  --stats_.live_sets_current;
}

void SymbolicBackend::enter_frame() noexcept {
  ++depth_;
  stats_.recursion_depth_peak = std::max(stats_.recursion_depth_peak, depth_);
}

void SymbolicBackend::leave_frame() noexcept { --depth_; }

template <SetKind K>
SymbolicBackend::Slot SymbolicBackend::slot_of(const Handle<K>& h) const {
  if (h.owner_ != this) {
    if (h.owner_ == nullptr) throw HandleMismatch("use of an empty or moved-from set handle");
    throw HandleMismatch("set handle belongs to a different backend instance");
  }
  return h.slot_;
}

namespace {

void check_ids(std::span<const StateId> ids, std::size_t n) {
  for (StateId v : ids)
    if (v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

}  // namespace

SymbolicGraph SymbolicBackend::load_graph(const ExplicitGraph& graph) {
  if (graph.num_vertices != num_states_ || graph.num_labels != num_actions_)
    throw std::invalid_argument("graph dimensions do not match the backend");
  std::vector<StateId> all(num_states_);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<StateId>(i);
  SymbolicGraph g;
  g.vertices = make_vertices(all);
  g.edges = make_relation(graph.edges);
  return g;
}

VertexSet SymbolicBackend::make_vertices(std::span<const StateId> ids) {
  check_ids(ids, num_states_);
  std::vector<StateId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return wrap<SetKind::kVertices>(do_vertices(sorted));
}

VertexSet SymbolicBackend::make_singleton(StateId v) {
  const StateId one[] = {v};
  return make_vertices(one);
}

PairSet SymbolicBackend::make_pairs(std::span<const StatePair> pairs) {
  for (const auto& p : pairs)
    if (p.state >= num_states_ || p.action >= num_actions_)
      throw std::out_of_range("state-action pair out of range");
  std::vector<StatePair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return wrap<SetKind::kPairs>(do_pairs(sorted));
}

Relation SymbolicBackend::make_relation(std::span<const Edge> edges) {
  for (const auto& e : edges)
    if (e.src >= num_states_ || e.dst >= num_states_ || e.label >= num_actions_)
      throw std::out_of_range("edge out of range");
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return wrap<SetKind::kRelation>(do_relation(sorted));
}

VertexSet SymbolicBackend::copy(const VertexSet& u) {
  return wrap<SetKind::kVertices>(do_copy(slot_of(u)));
}
PairSet SymbolicBackend::copy(const PairSet& x) { return wrap<SetKind::kPairs>(do_copy(slot_of(x))); }
Relation SymbolicBackend::copy(const Relation& e) {
  return wrap<SetKind::kRelation>(do_copy(slot_of(e)));
}

VertexSet SymbolicBackend::pre(const VertexSet& u, const SymbolicGraph& g) {
  const Slot su = slot_of(u), se = slot_of(g.edges);
  slot_of(g.vertices);
  before_operation();
  ++stats_.pre_post_ops;
  return wrap<SetKind::kVertices>(do_pre(su, se));
}

VertexSet SymbolicBackend::post(const VertexSet& u, const SymbolicGraph& g) {
  const Slot su = slot_of(u), se = slot_of(g.edges);
  slot_of(g.vertices);
  before_operation();
  ++stats_.pre_post_ops;
  return wrap<SetKind::kVertices>(do_post(su, se));
}

PairSet SymbolicBackend::pairs_into(const VertexSet& targets, const Relation& e) {
  const Slot st = slot_of(targets), se = slot_of(e);
  before_operation();
  ++stats_.exists_ops;
  return wrap<SetKind::kPairs>(do_pairs_into(st, se));
}

VertexSet SymbolicBackend::states_with_pair_outside(const PairSet& x, const Relation& e) {
  const Slot sx = slot_of(x), se = slot_of(e);
  before_operation();
  ++stats_.exists_ops;
  return wrap<SetKind::kVertices>(do_states_with_pair_outside(sx, se));
}

PairSet SymbolicBackend::enabled_pairs(const Relation& e) {
  const Slot se = slot_of(e);
  before_operation();
  ++stats_.exists_ops;
  return wrap<SetKind::kPairs>(do_enabled_pairs(se));
}

#define MECDEC_BASIC_OP(Ret, Name, Arg1, Arg2, Impl, Kind)        \
  Ret SymbolicBackend::Name(const Arg1& a, const Arg2& b) {       \
    const Slot sa = slot_of(a), sb = slot_of(b);                  \
    before_operation();                                           \
    ++stats_.basic_set_ops;                                       \
    return wrap<SetKind::Kind>(Impl(sa, sb));                     \
  }

MECDEC_BASIC_OP(VertexSet, unite, VertexSet, VertexSet, do_vertex_union, kVertices)
MECDEC_BASIC_OP(VertexSet, intersect, VertexSet, VertexSet, do_vertex_intersect, kVertices)
MECDEC_BASIC_OP(VertexSet, subtract, VertexSet, VertexSet, do_vertex_diff, kVertices)
MECDEC_BASIC_OP(PairSet, unite, PairSet, PairSet, do_pair_union, kPairs)
MECDEC_BASIC_OP(PairSet, intersect, PairSet, PairSet, do_pair_intersect, kPairs)
MECDEC_BASIC_OP(PairSet, subtract, PairSet, PairSet, do_pair_diff, kPairs)
MECDEC_BASIC_OP(PairSet, restrict_pairs, PairSet, VertexSet, do_restrict_pairs, kPairs)
MECDEC_BASIC_OP(Relation, remove_pairs, Relation, PairSet, do_remove_pairs, kRelation)
MECDEC_BASIC_OP(Relation, restrict, Relation, VertexSet, do_restrict, kRelation)

#undef MECDEC_BASIC_OP

VertexSet SymbolicBackend::complement_within(const VertexSet& u, const VertexSet& universe) {
  const Slot su = slot_of(u), sv = slot_of(universe);
  before_operation();
  ++stats_.basic_set_ops;
  return wrap<SetKind::kVertices>(do_vertex_diff(sv, su));
}

StateId SymbolicBackend::pick(const VertexSet& u) {
  const Slot s = slot_of(u);
  if (do_is_empty(s)) throw std::logic_error("pick from an empty vertex set");
  ++stats_.pick_ops;
  return do_pick(s);
}

std::size_t SymbolicBackend::cardinality(const VertexSet& u) {
  const Slot s = slot_of(u);
  ++stats_.cardinality_ops;
  return do_cardinality(s);
}

bool SymbolicBackend::is_empty(const VertexSet& u) const { return do_is_empty(slot_of(u)); }
bool SymbolicBackend::is_empty(const PairSet& x) const { return do_is_empty(slot_of(x)); }
bool SymbolicBackend::is_empty(const Relation& e) const { return do_is_empty(slot_of(e)); }
bool SymbolicBackend::equal(const VertexSet& a, const VertexSet& b) const {
  return do_equal(slot_of(a), slot_of(b));
}
bool SymbolicBackend::equal(const PairSet& a, const PairSet& b) const {
  return do_equal(slot_of(a), slot_of(b));
}
bool SymbolicBackend::contains(const VertexSet& u, StateId v) const {
  const Slot s = slot_of(u);
  return v < num_states_ && do_contains(s, v);
}
std::vector<StateId> SymbolicBackend::members(const VertexSet& u) const {
  return do_vertex_members(slot_of(u));
}
std::vector<StatePair> SymbolicBackend::members(const PairSet& x) const {
  return do_pair_members(slot_of(x));
}
std::vector<Edge> SymbolicBackend::members(const Relation& e) const {
  return do_edge_members(slot_of(e));
}

std::string_view to_string(BackendKind kind) noexcept {
  switch (kind) {
    case BackendKind::kBitset:
      return "bitset";
    case BackendKind::kBdd:
      return "bdd";
  }
  return "?";
}

BackendKind parse_backend_kind(std::string_view text) {
  if (text == "bitset") return BackendKind::kBitset;
  if (text == "bdd") return BackendKind::kBdd;
  throw std::invalid_argument("unknown backend '" + std::string(text) + "' (expected bitset or bdd)");
}

std::unique_ptr<SymbolicBackend> make_backend(BackendKind kind, std::size_t num_states,
                                              std::size_t num_actions) {
  switch (kind) {
    case BackendKind::kBitset:
      return std::make_unique<BitsetBackend>(num_states, num_actions);
    case BackendKind::kBdd:
      return std::make_unique<BddBackend>(num_states, num_actions);
  }
  throw std::invalid_argument("unknown backend kind");
}

}  // namespace mecdec
