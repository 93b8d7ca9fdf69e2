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

/// @file bdd.hpp
/// A small reduced ordered BDD package: hash-consed node table, direct-mapped
/// computed cache, relational product, monotone variable renaming, and
/// mark-and-sweep collection driven by caller-supplied roots.
///
/// Variables are identified with their level; variable 0 is the top of the
/// order. Node ids are only stable between calls to collect_garbage().

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mecdec::bdd {

using NodeId = std::uint32_t;

inline constexpr NodeId kFalse = 0;
inline constexpr NodeId kTrue = 1;

class Manager {
 public:
  explicit Manager(unsigned num_vars);

  unsigned num_vars() const noexcept { return num_vars_; }

  /// The projection function of variable `v`.
  NodeId var(unsigned v);

  NodeId apply_and(NodeId a, NodeId b);
  NodeId apply_or(NodeId a, NodeId b);
  /// a AND NOT b.
  NodeId apply_diff(NodeId a, NodeId b);

  /// Positive cube over `vars`, used as the quantification set.
  NodeId cube(std::span<const unsigned> vars);
  NodeId exists(NodeId f, NodeId cube);
  /// exists cube . (f AND g), without building f AND g.
  NodeId and_exists(NodeId f, NodeId g, NodeId cube);

  /// Registers a variable substitution. The map must be strictly increasing
  /// on the support of every function it is applied to.
  unsigned register_renaming(std::vector<unsigned> map);
  NodeId rename(NodeId f, unsigned renaming);

  /// Builds the disjunction of the given minterms. Each key encodes an
  /// assignment to `vars` (ascending levels) with vars[0] as the most
  /// significant bit. Keys must be sorted and unique.
  NodeId from_minterms(std::span<const std::uint64_t> keys, std::span<const unsigned> vars);

  /// All satisfying assignments over `vars`, ascending. `f` must not
  /// depend on variables outside `vars`.
  std::vector<std::uint64_t> minterms(NodeId f, std::span<const unsigned> vars) const;

  std::uint64_t sat_count(NodeId f, std::span<const unsigned> vars) const;

  /// Smallest satisfying key over `vars`. Precondition: f != kFalse.
  std::uint64_t min_minterm(NodeId f, std::span<const unsigned> vars) const;

  unsigned top_var(NodeId f) const noexcept { return nodes_[f].var; }
  NodeId low(NodeId f) const noexcept { return nodes_[f].lo; }
  NodeId high(NodeId f) const noexcept { return nodes_[f].hi; }

  /// Nodes currently allocated, terminals included.
  std::size_t live_nodes() const noexcept { return nodes_.size() - free_count_; }

  /// Frees every node unreachable from `roots` and clears the computed cache.
  void collect_garbage(std::span<const NodeId> roots);

 private:
  struct Node {
    unsigned var;
    NodeId lo;
    NodeId hi;
    NodeId next;
  };

  struct CacheEntry {
    std::uint32_t op = 0;
    NodeId a = 0;
    NodeId b = 0;
    NodeId c = 0;
    NodeId result = 0;
  };

  enum Op : std::uint32_t { kAnd = 1, kOr, kDiff, kExists, kAndExists, kRenameBase };

  NodeId make(unsigned var, NodeId lo, NodeId hi);
  void grow_buckets();
  std::size_t bucket_of(unsigned var, NodeId lo, NodeId hi) const noexcept;
  CacheEntry& cache_slot(std::uint32_t op, NodeId a, NodeId b, NodeId c) noexcept;
  NodeId build(std::span<const std::uint64_t> keys, std::span<const unsigned> vars, std::size_t depth);

  unsigned num_vars_;
  unsigned terminal_var_;
  std::vector<Node> nodes_;
  std::vector<NodeId> buckets_;
  NodeId free_head_;
  std::size_t free_count_ = 0;
  std::vector<CacheEntry> cache_;
  std::vector<std::vector<unsigned>> renamings_;
};

}  // namespace mecdec::bdd
