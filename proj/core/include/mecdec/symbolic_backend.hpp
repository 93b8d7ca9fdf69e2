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

/// @file symbolic_backend.hpp
/// Symbolic set and relation operations over the underlying graph of an MDP.
///
/// A backend owns every set it hands out. Handles are move-only; each live
/// handle counts as one set towards the symbolic-space measure, and
/// destroying a handle releases it. Every counted operation is accounted in
/// this base class, so two backends driven by the same algorithm report the
/// same counters.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mecdec/explicit_mdp.hpp"

namespace mecdec {

/// Operation and space counters. Counters only grow during a run.
struct OpStats {
  std::uint64_t pre_post_ops = 0;
  std::uint64_t exists_ops = 0;
  /// Union, intersection, difference, complement, restriction, cylinder removal.
  std::uint64_t basic_set_ops = 0;
  std::uint64_t cardinality_ops = 0;
  std::uint64_t pick_ops = 0;
  std::uint64_t live_sets_current = 0;
  std::uint64_t live_sets_peak = 0;
  std::uint64_t recursion_depth_peak = 0;

  /// The headline "symbolic operations" measure: Pre/Post plus exists.
  std::uint64_t symbolic_ops() const noexcept { return pre_post_ops + exists_ops; }

  friend bool operator==(const OpStats&, const OpStats&) = default;
};

/// Raised when a handle is used with a backend that did not create it.
class HandleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SymbolicBackend;

enum class SetKind : std::uint8_t { kVertices, kPairs, kRelation };

template <SetKind K>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : owner_(other.owner_), slot_(other.slot_) { other.owner_ = nullptr; }
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      reset();
      owner_ = other.owner_;
      slot_ = other.slot_;
      other.owner_ = nullptr;
    }
    return *this;
  }
  ~Handle() { reset(); }

  bool valid() const noexcept { return owner_ != nullptr; }
  void reset() noexcept;

 private:
  friend class SymbolicBackend;
  Handle(SymbolicBackend* owner, std::uint32_t slot) : owner_(owner), slot_(slot) {}

  SymbolicBackend* owner_ = nullptr;
  std::uint32_t slot_ = 0;
};

/// A vertex set V' (subset of S).
using VertexSet = Handle<SetKind::kVertices>;
/// A state-action pair set X (subset of S x A).
using PairSet = Handle<SetKind::kPairs>;
/// A labelled edge relation E (subset of S x A x S).
using Relation = Handle<SetKind::kRelation>;

/// (V, E) with E contained in V x A x V: the graph of a sub-MDP.
struct SymbolicGraph {
  VertexSet vertices;
  Relation edges;
};

class SymbolicBackend {
 public:
  SymbolicBackend(std::size_t num_states, std::size_t num_actions);
  virtual ~SymbolicBackend();

  SymbolicBackend(const SymbolicBackend&) = delete;
  SymbolicBackend& operator=(const SymbolicBackend&) = delete;

  virtual std::string_view name() const noexcept = 0;

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_actions() const noexcept { return num_actions_; }

  // Construction from explicit data. Not counted as symbolic operations.
  SymbolicGraph load_graph(const ExplicitGraph& graph);
  VertexSet make_vertices(std::span<const StateId> ids);
  VertexSet make_singleton(StateId v);
  PairSet make_pairs(std::span<const StatePair> pairs);
  Relation make_relation(std::span<const Edge> edges);
  VertexSet copy(const VertexSet& u);
  PairSet copy(const PairSet& x);
  Relation copy(const Relation& e);

  // Pre/Post: one pre_post op each.
  VertexSet pre(const VertexSet& u, const SymbolicGraph& g);
  VertexSet post(const VertexSet& u, const SymbolicGraph& g);

  // Projections: one exists op each.
  /// {(s,a) | exists t in targets . (s,a,t) in E}.
  PairSet pairs_into(const VertexSet& targets, const Relation& e);
  /// {s | exists a, t . (s,a,t) in E and (s,a) not in X}.
  VertexSet states_with_pair_outside(const PairSet& x, const Relation& e);
  /// {(s,a) | exists t . (s,a,t) in E}.
  PairSet enabled_pairs(const Relation& e);

  // Basic set operations: one basic op each.
  VertexSet unite(const VertexSet& a, const VertexSet& b);
  VertexSet intersect(const VertexSet& a, const VertexSet& b);
  VertexSet subtract(const VertexSet& a, const VertexSet& b);
  /// universe \ u.
  VertexSet complement_within(const VertexSet& u, const VertexSet& universe);
  PairSet unite(const PairSet& a, const PairSet& b);
  PairSet intersect(const PairSet& a, const PairSet& b);
  PairSet subtract(const PairSet& a, const PairSet& b);
  /// {(s,a) in X | s in u}.
  PairSet restrict_pairs(const PairSet& x, const VertexSet& u);
  /// E \ (X x V): drops every edge whose state-action pair is in X.
  Relation remove_pairs(const Relation& e, const PairSet& x);
  /// E intersected with (u x A x u).
  Relation restrict(const Relation& e, const VertexSet& u);

  /// Minimum vertex id of a non-empty set. Throws std::logic_error on empty.
  StateId pick(const VertexSet& u);
  std::size_t cardinality(const VertexSet& u);

  // Uncounted queries.
  bool is_empty(const VertexSet& u) const;
  bool is_empty(const PairSet& x) const;
  bool is_empty(const Relation& e) const;
  bool equal(const VertexSet& a, const VertexSet& b) const;
  bool contains(const VertexSet& u, StateId v) const;
  bool equal(const PairSet& a, const PairSet& b) const;
  std::vector<StateId> members(const VertexSet& u) const;
  std::vector<StatePair> members(const PairSet& x) const;
  std::vector<Edge> members(const Relation& e) const;

  /// Point-in-time copy of the counters.
  OpStats stats() const noexcept { return stats_; }

  /// Tracks recursion depth of the algorithm driving this backend.
  class FrameGuard {
   public:
    explicit FrameGuard(SymbolicBackend& b) : backend_(&b) { backend_->enter_frame(); }
    FrameGuard(const FrameGuard&) = delete;
    FrameGuard& operator=(const FrameGuard&) = delete;
    ~FrameGuard() { backend_->leave_frame(); }

   private:
    SymbolicBackend* backend_;
  };
  FrameGuard frame() { return FrameGuard(*this); }
  std::uint64_t current_depth() const noexcept { return depth_; }

 protected:
  using Slot = std::uint32_t;

  /// Reserves a fresh slot for a payload the derived class is about to store.
  Slot acquire_slot();
  /// Number of slots ever handed out; payload storage must cover it.
  std::size_t slot_capacity() const noexcept { return slot_live_.size(); }
  /// Slots that are currently live, for root enumeration.
  template <class F>
  void for_each_live_slot(F&& f) const {
    for (Slot s = 0; s < slot_live_.size(); ++s)
      if (slot_live_[s]) f(s);
  }

  virtual void free_payload(Slot s) = 0;

  virtual Slot do_vertices(std::span<const StateId> ids) = 0;
  virtual Slot do_pairs(std::span<const StatePair> pairs) = 0;
  virtual Slot do_relation(std::span<const Edge> edges) = 0;
  virtual Slot do_copy(Slot s) = 0;

  virtual Slot do_pre(Slot u, Slot e) = 0;
  virtual Slot do_post(Slot u, Slot e) = 0;
  virtual Slot do_pairs_into(Slot targets, Slot e) = 0;
  virtual Slot do_states_with_pair_outside(Slot x, Slot e) = 0;
  virtual Slot do_enabled_pairs(Slot e) = 0;

  virtual Slot do_vertex_union(Slot a, Slot b) = 0;
  virtual Slot do_vertex_intersect(Slot a, Slot b) = 0;
  virtual Slot do_vertex_diff(Slot a, Slot b) = 0;
  virtual Slot do_pair_union(Slot a, Slot b) = 0;
  virtual Slot do_pair_intersect(Slot a, Slot b) = 0;
  virtual Slot do_pair_diff(Slot a, Slot b) = 0;
  virtual Slot do_restrict_pairs(Slot x, Slot u) = 0;
  virtual Slot do_remove_pairs(Slot e, Slot x) = 0;
  virtual Slot do_restrict(Slot e, Slot u) = 0;

  virtual StateId do_pick(Slot u) const = 0;
  virtual std::size_t do_cardinality(Slot u) const = 0;
  virtual bool do_is_empty(Slot s) const = 0;
  virtual bool do_equal(Slot a, Slot b) const = 0;
  virtual bool do_contains(Slot u, StateId v) const = 0;
  virtual std::vector<StateId> do_vertex_members(Slot u) const = 0;
  virtual std::vector<StatePair> do_pair_members(Slot x) const = 0;
  virtual std::vector<Edge> do_edge_members(Slot e) const = 0;

  /// Hook run before each counted operation; backends may compact storage.
  virtual void before_operation() {}

 private:
  template <SetKind K>
  friend class Handle;

  template <SetKind K>
  Slot slot_of(const Handle<K>& h) const;
  template <SetKind K>
  Handle<K> wrap(Slot s) {
    return Handle<K>(this, s);
  }
  void release(Slot s) noexcept;
  void enter_frame() noexcept;
  void leave_frame() noexcept;

  std::size_t num_states_;
  std::size_t num_actions_;
  std::vector<bool> slot_live_;
  std::vector<Slot> free_slots_;
  OpStats stats_;
  std::uint64_t depth_ = 0;
};

template <SetKind K>
void Handle<K>::reset() noexcept {
  if (owner_ != nullptr) {
    owner_->release(slot_);
    owner_ = nullptr;
  }
}

enum class BackendKind { kBitset, kBdd };

std::string_view to_string(BackendKind kind) noexcept;
/// Accepts "bitset" and "bdd". Throws std::invalid_argument otherwise.
BackendKind parse_backend_kind(std::string_view text);

std::unique_ptr<SymbolicBackend> make_backend(BackendKind kind, std::size_t num_states,
                                              std::size_t num_actions);

}  // namespace mecdec
