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

#pragma once

#include <boost/dynamic_bitset.hpp>

#include "mecdec/symbolic_backend.hpp"

namespace mecdec {

/// Explicit backend: vertex sets are bitsets over S, state-action sets are
/// bitsets over S x A (index s * |A| + a), relations are sorted edge lists.
class BitsetBackend final : public SymbolicBackend {
 public:
  BitsetBackend(std::size_t num_states, std::size_t num_actions);

  std::string_view name() const noexcept override { return "bitset"; }

 protected:
  void free_payload(Slot s) override;

  Slot do_vertices(std::span<const StateId> ids) override;
  Slot do_pairs(std::span<const StatePair> pairs) override;
  Slot do_relation(std::span<const Edge> edges) override;
  Slot do_copy(Slot s) override;

  Slot do_pre(Slot u, Slot e) override;
  Slot do_post(Slot u, Slot e) override;
  Slot do_pairs_into(Slot targets, Slot e) override;
  Slot do_states_with_pair_outside(Slot x, Slot e) override;
  Slot do_enabled_pairs(Slot e) override;

  Slot do_vertex_union(Slot a, Slot b) override;
  Slot do_vertex_intersect(Slot a, Slot b) override;
  Slot do_vertex_diff(Slot a, Slot b) override;
  Slot do_pair_union(Slot a, Slot b) override;
  Slot do_pair_intersect(Slot a, Slot b) override;
  Slot do_pair_diff(Slot a, Slot b) override;
  Slot do_restrict_pairs(Slot x, Slot u) override;
  Slot do_remove_pairs(Slot e, Slot x) override;
  Slot do_restrict(Slot e, Slot u) override;

  StateId do_pick(Slot u) const override;
  std::size_t do_cardinality(Slot u) const override;
  bool do_is_empty(Slot s) const override;
  bool do_equal(Slot a, Slot b) const override;
  bool do_contains(Slot u, StateId v) const override;
  std::vector<StateId> do_vertex_members(Slot u) const override;
  std::vector<StatePair> do_pair_members(Slot x) const override;
  std::vector<Edge> do_edge_members(Slot e) const override;

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  struct Payload {
    SetKind kind = SetKind::kVertices;
    Bits bits;
    std::vector<Edge> edges;
  };

  Slot store(Payload p);
  Slot store_bits(SetKind kind, Bits bits) { return store({kind, std::move(bits), {}}); }
  Slot store_edges(std::vector<Edge> edges) { return store({SetKind::kRelation, {}, std::move(edges)}); }
  std::size_t pair_index(StateId s, ActionId a) const noexcept { return s * num_actions() + a; }

  std::vector<Payload> store_;
};

}  // namespace mecdec
