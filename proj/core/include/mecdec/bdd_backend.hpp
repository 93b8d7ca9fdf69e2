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

#include "mecdec/bdd.hpp"
#include "mecdec/symbolic_backend.hpp"

namespace mecdec {

/// BDD backend. With t state bits and l action bits the variable order is
///   x_1 x'_1 x_2 x'_2 ... x_t x'_t u_1 ... u_l
/// (current/next state bits interleaved, most significant first, action
/// bits last). Vertex sets live on x, state-action sets on (x, u), and the
/// edge relation on (x, u, x'). Because the x bits are ordered most
/// significant first, the lexicographically least satisfying assignment of
/// a vertex set is its minimum id.
class BddBackend final : public SymbolicBackend {
 public:
  BddBackend(std::size_t num_states, std::size_t num_actions);

  std::string_view name() const noexcept override { return "bdd"; }

  unsigned state_bits() const noexcept { return state_bits_; }
  unsigned action_bits() const noexcept { return action_bits_; }
  /// Nodes currently allocated in the underlying manager.
  std::size_t live_nodes() const noexcept { return manager_.live_nodes(); }

 protected:
  void free_payload(Slot s) override;
  void before_operation() override;

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
  Slot store(bdd::NodeId f);
  bdd::NodeId node(Slot s) const { return roots_[s]; }
  std::uint64_t encode_edge(const Edge& e) const noexcept;
  Edge decode_edge(std::uint64_t key) const noexcept;

  unsigned state_bits_;
  unsigned action_bits_;
  bdd::Manager manager_;
  std::vector<unsigned> x_vars_;
  std::vector<unsigned> pair_vars_;
  std::vector<unsigned> edge_vars_;
  unsigned to_next_ = 0;
  unsigned to_current_ = 0;
  bdd::NodeId cube_next_ = bdd::kTrue;
  bdd::NodeId cube_current_and_action_ = bdd::kTrue;
  bdd::NodeId cube_action_and_next_ = bdd::kTrue;
  std::vector<bdd::NodeId> roots_;
  std::size_t gc_threshold_;
};

}  // namespace mecdec
