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

#include "mecdec/bitset_backend.hpp"

namespace mecdec {

BitsetBackend::BitsetBackend(std::size_t num_states, std::size_t num_actions)
    : SymbolicBackend(num_states, num_actions) {}

BitsetBackend::Slot BitsetBackend::store(Payload p) {
  const Slot s = acquire_slot();
  if (store_.size() <= s) store_.resize(s + 1);
  store_[s] = std::move(p);
  return s;
}

void BitsetBackend::free_payload(Slot s) {
  store_[s].bits.clear();
  store_[s].bits.shrink_to_fit();
  store_[s].edges = {};
}

BitsetBackend::Slot BitsetBackend::do_vertices(std::span<const StateId> ids) {
  Bits b(num_states());
  for (StateId v : ids) b.set(v);
  return store_bits(SetKind::kVertices, std::move(b));
}

BitsetBackend::Slot BitsetBackend::do_pairs(std::span<const StatePair> pairs) {
  Bits b(num_states() * num_actions());
  for (const auto& p : pairs) b.set(pair_index(p.state, p.action));
  return store_bits(SetKind::kPairs, std::move(b));
}

BitsetBackend::Slot BitsetBackend::do_relation(std::span<const Edge> edges) {
  return store_edges(std::vector<Edge>(edges.begin(), edges.end()));
}

BitsetBackend::Slot BitsetBackend::do_copy(Slot s) {
  Payload p = store_[s];
  return store(std::move(p));
}

BitsetBackend::Slot BitsetBackend::do_pre(Slot u, Slot e) {
  const Bits& target = store_[u].bits;
  Bits out(num_states());
  for (const Edge& ed : store_[e].edges)
    if (target.test(ed.dst)) out.set(ed.src);
  return store_bits(SetKind::kVertices, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_post(Slot u, Slot e) {
  const Bits& source = store_[u].bits;
  Bits out(num_states());
  for (const Edge& ed : store_[e].edges)
    if (source.test(ed.src)) out.set(ed.dst);
  return store_bits(SetKind::kVertices, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_pairs_into(Slot targets, Slot e) {
  const Bits& t = store_[targets].bits;
  Bits out(num_states() * num_actions());
  for (const Edge& ed : store_[e].edges)
    if (t.test(ed.dst)) out.set(pair_index(ed.src, ed.label));
  return store_bits(SetKind::kPairs, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_states_with_pair_outside(Slot x, Slot e) {
  const Bits& pairs = store_[x].bits;
  Bits out(num_states());
  for (const Edge& ed : store_[e].edges)
    if (!pairs.test(pair_index(ed.src, ed.label))) out.set(ed.src);
  return store_bits(SetKind::kVertices, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_enabled_pairs(Slot e) {
  Bits out(num_states() * num_actions());
  for (const Edge& ed : store_[e].edges) out.set(pair_index(ed.src, ed.label));
  return store_bits(SetKind::kPairs, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_vertex_union(Slot a, Slot b) {
  return store_bits(SetKind::kVertices, store_[a].bits | store_[b].bits);
}
BitsetBackend::Slot BitsetBackend::do_vertex_intersect(Slot a, Slot b) {
  return store_bits(SetKind::kVertices, store_[a].bits & store_[b].bits);
}
BitsetBackend::Slot BitsetBackend::do_vertex_diff(Slot a, Slot b) {
  return store_bits(SetKind::kVertices, store_[a].bits - store_[b].bits);
}
BitsetBackend::Slot BitsetBackend::do_pair_union(Slot a, Slot b) {
  return store_bits(SetKind::kPairs, store_[a].bits | store_[b].bits);
}
BitsetBackend::Slot BitsetBackend::do_pair_intersect(Slot a, Slot b) {
  return store_bits(SetKind::kPairs, store_[a].bits & store_[b].bits);
}
BitsetBackend::Slot BitsetBackend::do_pair_diff(Slot a, Slot b) {
  return store_bits(SetKind::kPairs, store_[a].bits - store_[b].bits);
}

BitsetBackend::Slot BitsetBackend::do_restrict_pairs(Slot x, Slot u) {
  const Bits& pairs = store_[x].bits;
  const Bits& states = store_[u].bits;
  Bits out(pairs.size());
  for (auto i = pairs.find_first(); i != Bits::npos; i = pairs.find_next(i))
    if (states.test(i / num_actions())) out.set(i);
  return store_bits(SetKind::kPairs, std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_remove_pairs(Slot e, Slot x) {
  const Bits& pairs = store_[x].bits;
  std::vector<Edge> out;
  for (const Edge& ed : store_[e].edges)
    if (!pairs.test(pair_index(ed.src, ed.label))) out.push_back(ed);
  return store_edges(std::move(out));
}

BitsetBackend::Slot BitsetBackend::do_restrict(Slot e, Slot u) {
  const Bits& keep = store_[u].bits;
  std::vector<Edge> out;
  for (const Edge& ed : store_[e].edges)
    if (keep.test(ed.src) && keep.test(ed.dst)) out.push_back(ed);
  return store_edges(std::move(out));
}

StateId BitsetBackend::do_pick(Slot u) const { return static_cast<StateId>(store_[u].bits.find_first()); }

std::size_t BitsetBackend::do_cardinality(Slot u) const { return store_[u].bits.count(); }

bool BitsetBackend::do_is_empty(Slot s) const {
  const Payload& p = store_[s];
  return p.kind == SetKind::kRelation ? p.edges.empty() : p.bits.none();
}

bool BitsetBackend::do_equal(Slot a, Slot b) const {
  const Payload& pa = store_[a];
  const Payload& pb = store_[b];
  return pa.kind == pb.kind && pa.bits == pb.bits && pa.edges == pb.edges;
}

bool BitsetBackend::do_contains(Slot u, StateId v) const { return store_[u].bits.test(v); }

std::vector<StateId> BitsetBackend::do_vertex_members(Slot u) const {
  std::vector<StateId> out;
  const Bits& b = store_[u].bits;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<StateId>(i));
  return out;
}

std::vector<StatePair> BitsetBackend::do_pair_members(Slot x) const {
  std::vector<StatePair> out;
  const Bits& b = store_[x].bits;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back({static_cast<StateId>(i / num_actions()), static_cast<ActionId>(i % num_actions())});
  return out;
}

std::vector<Edge> BitsetBackend::do_edge_members(Slot e) const { return store_[e].edges; }

}  // namespace mecdec
