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

#include "mecdec/bdd.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace mecdec::bdd {

namespace {

constexpr NodeId kNil = std::numeric_limits<NodeId>::max();
constexpr unsigned kFreeVar = std::numeric_limits<unsigned>::max();
constexpr std::size_t kInitialBuckets = 1u << 12;
constexpr std::size_t kCacheSize = 1u << 18;

inline std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

Manager::Manager(unsigned num_vars)
    : num_vars_(num_vars),
      terminal_var_(num_vars),
      buckets_(kInitialBuckets, kNil),
      free_head_(kNil),
      cache_(kCacheSize) {
  if (num_vars > 63) throw std::invalid_argument("bdd manager supports at most 63 variables");
  nodes_.push_back({terminal_var_, kFalse, kFalse, kNil});
  nodes_.push_back({terminal_var_, kTrue, kTrue, kNil});
}

std::size_t Manager::bucket_of(unsigned var, NodeId lo, NodeId hi) const noexcept {
  std::uint64_t h = mix((static_cast<std::uint64_t>(var) << 40) ^ (static_cast<std::uint64_t>(lo) << 20) ^
                        hi ^ (static_cast<std::uint64_t>(hi) << 44));
  return static_cast<std::size_t>(h & (buckets_.size() - 1));
}

void Manager::grow_buckets() {
  std::vector<NodeId> fresh(buckets_.size() * 2, kNil);
  buckets_.swap(fresh);
  for (NodeId id = 2; id < nodes_.size(); ++id) {
    Node& n = nodes_[id];
    if (n.var == kFreeVar) continue;
    std::size_t b = bucket_of(n.var, n.lo, n.hi);
    n.next = buckets_[b];
    buckets_[b] = id;
  }
}

NodeId Manager::make(unsigned var, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;
  assert(var < nodes_[lo].var && var < nodes_[hi].var);
  std::size_t b = bucket_of(var, lo, hi);
  for (NodeId id = buckets_[b]; id != kNil; id = nodes_[id].next) {
    const Node& n = nodes_[id];
    if (n.var == var && n.lo == lo && n.hi == hi) return id;
  }
  NodeId id;
  if (free_head_ != kNil) {
    id = free_head_;
    free_head_ = nodes_[id].next;
    --free_count_;
    nodes_[id] = {var, lo, hi, kNil};
  } else {
    id = static_cast<NodeId>(nodes_.size());
    if (id == kNil) throw std::length_error("bdd node table exhausted");
    nodes_.push_back({var, lo, hi, kNil});
  }
  if (live_nodes() > buckets_.size()) {
    grow_buckets();
    b = bucket_of(var, lo, hi);
    // grow_buckets already linked the new node.
    return id;
  }
  nodes_[id].next = buckets_[b];
  buckets_[b] = id;
  return id;
}

Manager::CacheEntry& Manager::cache_slot(std::uint32_t op, NodeId a, NodeId b, NodeId c) noexcept {
  std::uint64_t h = mix((static_cast<std::uint64_t>(op) << 56) ^ (static_cast<std::uint64_t>(a) << 28) ^
                        (static_cast<std::uint64_t>(b) << 7) ^ (static_cast<std::uint64_t>(c) << 36) ^ b);
  return cache_[h & (cache_.size() - 1)];
}

NodeId Manager::var(unsigned v) {
  if (v >= num_vars_) throw std::out_of_range("bdd variable out of range");
  return make(v, kFalse, kTrue);
}

NodeId Manager::apply_and(NodeId a, NodeId b) {
  if (a == kFalse || b == kFalse) return kFalse;
  if (a == kTrue) return b;
  if (b == kTrue || a == b) return a;
  if (a > b) std::swap(a, b);
  CacheEntry& e = cache_slot(kAnd, a, b, 0);
  if (e.op == kAnd && e.a == a && e.b == b) return e.result;
  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  const unsigned v = std::min(na.var, nb.var);
  NodeId lo = apply_and(na.var == v ? na.lo : a, nb.var == v ? nb.lo : b);
  NodeId hi = apply_and(na.var == v ? na.hi : a, nb.var == v ? nb.hi : b);
  NodeId r = make(v, lo, hi);
  CacheEntry& slot = cache_slot(kAnd, a, b, 0);
  slot = {kAnd, a, b, 0, r};
  return r;
}

NodeId Manager::apply_or(NodeId a, NodeId b) {
  if (a == kTrue || b == kTrue) return kTrue;
  if (a == kFalse) return b;
  if (b == kFalse || a == b) return a;
  if (a > b) std::swap(a, b);
  CacheEntry& e = cache_slot(kOr, a, b, 0);
  if (e.op == kOr && e.a == a && e.b == b) return e.result;
  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  const unsigned v = std::min(na.var, nb.var);
  NodeId lo = apply_or(na.var == v ? na.lo : a, nb.var == v ? nb.lo : b);
  NodeId hi = apply_or(na.var == v ? na.hi : a, nb.var == v ? nb.hi : b);
  NodeId r = make(v, lo, hi);
  cache_slot(kOr, a, b, 0) = {kOr, a, b, 0, r};
  return r;
}

NodeId Manager::apply_diff(NodeId a, NodeId b) {
  if (a == kFalse || b == kTrue || a == b) return kFalse;
  if (b == kFalse) return a;
  CacheEntry& e = cache_slot(kDiff, a, b, 0);
  if (e.op == kDiff && e.a == a && e.b == b) return e.result;
  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  const unsigned v = std::min(na.var, nb.var);
  NodeId lo = apply_diff(na.var == v ? na.lo : a, nb.var == v ? nb.lo : b);
  NodeId hi = apply_diff(na.var == v ? na.hi : a, nb.var == v ? nb.hi : b);
  NodeId r = make(v, lo, hi);
  cache_slot(kDiff, a, b, 0) = {kDiff, a, b, 0, r};
  return r;
}

NodeId Manager::cube(std::span<const unsigned> vars) {
  std::vector<unsigned> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  NodeId r = kTrue;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) r = make(*it, kFalse, r);
  return r;
}

NodeId Manager::exists(NodeId f, NodeId c) {
  if (f <= kTrue || c == kTrue) return f;
  const unsigned fv = nodes_[f].var;
  while (c != kTrue && nodes_[c].var < fv) c = nodes_[c].hi;
  if (c == kTrue) return f;
  CacheEntry& e = cache_slot(kExists, f, c, 0);
  if (e.op == kExists && e.a == f && e.b == c) return e.result;
  const Node nf = nodes_[f];
  NodeId r;
  if (nodes_[c].var == nf.var) {
    const NodeId rest = nodes_[c].hi;
    NodeId lo = exists(nf.lo, rest);
    r = lo == kTrue ? kTrue : apply_or(lo, exists(nf.hi, rest));
  } else {
    NodeId lo = exists(nf.lo, c);
    NodeId hi = exists(nf.hi, c);
    r = make(nf.var, lo, hi);
  }
  cache_slot(kExists, f, c, 0) = {kExists, f, c, 0, r};
  return r;
}

NodeId Manager::and_exists(NodeId f, NodeId g, NodeId c) {
  if (f == kFalse || g == kFalse) return kFalse;
  if (c == kTrue) return apply_and(f, g);
  if (f == kTrue) return exists(g, c);
  if (g == kTrue || f == g) return exists(f, c);
  if (f > g) std::swap(f, g);
  const Node nf = nodes_[f];
  const Node ng = nodes_[g];
  const unsigned v = std::min(nf.var, ng.var);
  while (c != kTrue && nodes_[c].var < v) c = nodes_[c].hi;
  if (c == kTrue) return apply_and(f, g);
  CacheEntry& e = cache_slot(kAndExists, f, g, c);
  if (e.op == kAndExists && e.a == f && e.b == g && e.c == c) return e.result;
  const NodeId f0 = nf.var == v ? nf.lo : f, f1 = nf.var == v ? nf.hi : f;
  const NodeId g0 = ng.var == v ? ng.lo : g, g1 = ng.var == v ? ng.hi : g;
  NodeId r;
  if (nodes_[c].var == v) {
    const NodeId rest = nodes_[c].hi;
    NodeId lo = and_exists(f0, g0, rest);
    r = lo == kTrue ? kTrue : apply_or(lo, and_exists(f1, g1, rest));
  } else {
    NodeId lo = and_exists(f0, g0, c);
    NodeId hi = and_exists(f1, g1, c);
    r = make(v, lo, hi);
  }
  cache_slot(kAndExists, f, g, c) = {kAndExists, f, g, c, r};
  return r;
}

unsigned Manager::register_renaming(std::vector<unsigned> map) {
  if (map.size() != num_vars_) throw std::invalid_argument("renaming must map every variable");
  for (unsigned target : map)
    if (target >= num_vars_) throw std::invalid_argument("renaming target out of range");
  renamings_.push_back(std::move(map));
  return static_cast<unsigned>(renamings_.size() - 1);
}

NodeId Manager::rename(NodeId f, unsigned renaming) {
  if (f <= kTrue) return f;
  const std::uint32_t op = kRenameBase + renaming;
  CacheEntry& e = cache_slot(op, f, 0, 0);
  if (e.op == op && e.a == f) return e.result;
  const Node nf = nodes_[f];
  NodeId lo = rename(nf.lo, renaming);
  NodeId hi = rename(nf.hi, renaming);
  NodeId r = make(renamings_[renaming][nf.var], lo, hi);
  cache_slot(op, f, 0, 0) = {op, f, 0, 0, r};
  return r;
}

NodeId Manager::build(std::span<const std::uint64_t> keys, std::span<const unsigned> vars,
                      std::size_t depth) {
  if (keys.empty()) return kFalse;
  if (depth == vars.size()) return kTrue;
  const std::uint64_t bit = std::uint64_t{1} << (vars.size() - 1 - depth);
  auto split = std::partition_point(keys.begin(), keys.end(),
                                    [bit](std::uint64_t k) { return (k & bit) == 0; });
  const auto mid = static_cast<std::size_t>(split - keys.begin());
  NodeId lo = build(keys.subspan(0, mid), vars, depth + 1);
  NodeId hi = build(keys.subspan(mid), vars, depth + 1);
  return make(vars[depth], lo, hi);
}

NodeId Manager::from_minterms(std::span<const std::uint64_t> keys, std::span<const unsigned> vars) {
  assert(std::is_sorted(vars.begin(), vars.end()));
  assert(std::adjacent_find(keys.begin(), keys.end(), std::greater_equal<>()) == keys.end());
  return build(keys, vars, 0);
}

std::vector<std::uint64_t> Manager::minterms(NodeId f, std::span<const unsigned> vars) const {
  std::vector<std::uint64_t> out;
  const std::size_t width = vars.size();
  // Depth-first, low branch first: keys come out ascending.
  struct Frame {
    NodeId node;
    std::size_t depth;
    std::uint64_t prefix;
  };
  std::vector<Frame> stack{{f, 0, 0}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.node == kFalse) continue;
    if (fr.depth == width) {
      out.push_back(fr.prefix);
      continue;
    }
    const std::uint64_t bit = std::uint64_t{1} << (width - 1 - fr.depth);
    const Node& n = nodes_[fr.node];
    NodeId lo = fr.node, hi = fr.node;
    if (n.var == vars[fr.depth]) {
      lo = n.lo;
      hi = n.hi;
    } else {
      assert(n.var > vars[fr.depth]);
    }
    stack.push_back({hi, fr.depth + 1, fr.prefix | bit});
    stack.push_back({lo, fr.depth + 1, fr.prefix});
  }
  return out;
}

std::uint64_t Manager::sat_count(NodeId f, std::span<const unsigned> vars) const {
  std::unordered_map<unsigned, std::size_t> rank;
  for (std::size_t i = 0; i < vars.size(); ++i) rank[vars[i]] = i;
  auto rank_of = [&](NodeId n) -> std::size_t {
    return n <= kTrue ? vars.size() : rank.at(nodes_[n].var);
  };
  std::unordered_map<NodeId, std::uint64_t> memo;
  // Counts assignments to the variables ranked at or below the node's own.
  auto count = [&](auto&& self, NodeId n) -> std::uint64_t {
    if (n == kFalse) return 0;
    if (n == kTrue) return 1;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const Node& nd = nodes_[n];
    const std::size_t r = rank_of(n);
    std::uint64_t lo = self(self, nd.lo) << (rank_of(nd.lo) - r - 1);
    std::uint64_t hi = self(self, nd.hi) << (rank_of(nd.hi) - r - 1);
    return memo[n] = lo + hi;
  };
  return count(count, f) << rank_of(f);
}

std::uint64_t Manager::min_minterm(NodeId f, std::span<const unsigned> vars) const {
  assert(f != kFalse);
  std::uint64_t key = 0;
  const std::size_t width = vars.size();
  for (std::size_t d = 0; d < width; ++d) {
    const Node& n = nodes_[f];
    if (n.var != vars[d]) continue;
    if (n.lo != kFalse) {
      f = n.lo;
    } else {
      f = n.hi;
      key |= std::uint64_t{1} << (width - 1 - d);
    }
  }
  return key;
}

void Manager::collect_garbage(std::span<const NodeId> roots) {
  std::vector<bool> marked(nodes_.size(), false);
  marked[kFalse] = marked[kTrue] = true;
  std::vector<NodeId> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    if (marked[n]) continue;
    marked[n] = true;
    stack.push_back(nodes_[n].lo);
    stack.push_back(nodes_[n].hi);
  }
  std::fill(buckets_.begin(), buckets_.end(), kNil);
  free_head_ = kNil;
  free_count_ = 0;
  for (NodeId id = static_cast<NodeId>(nodes_.size()); id-- > 2;) {
    Node& n = nodes_[id];
    if (!marked[id]) {
      n.var = kFreeVar;
      n.next = free_head_;
      free_head_ = id;
      ++free_count_;
    } else {
      std::size_t b = bucket_of(n.var, n.lo, n.hi);
      n.next = buckets_[b];
      buckets_[b] = id;
    }
  }
  std::fill(cache_.begin(), cache_.end(), CacheEntry{});
}

}  // namespace mecdec::bdd
