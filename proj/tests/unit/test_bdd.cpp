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

#include <catch_amalgamated.hpp>
#include <random>

#include "mecdec/bdd.hpp"

using namespace mecdec::bdd;

namespace {

constexpr unsigned kVars = 5;

// Truth table of f over all 2^kVars assignments; bit i of the index is var (kVars-1-i).
std::vector<bool> table(const Manager& m, NodeId f) {
  std::vector<bool> t(1u << kVars);
  for (unsigned x = 0; x < t.size(); ++x) {
    NodeId n = f;
    while (n != kFalse && n != kTrue) {
      const unsigned v = m.top_var(n);
      n = ((x >> (kVars - 1 - v)) & 1u) ? m.high(n) : m.low(n);
    }
    t[x] = n == kTrue;
  }
  return t;
}

std::vector<unsigned> all_vars() {
  std::vector<unsigned> v(kVars);
  for (unsigned i = 0; i < kVars; ++i) v[i] = i;
  return v;
}

NodeId random_function(Manager& m, std::mt19937_64& rng, std::vector<bool>* truth = nullptr) {
  std::vector<std::uint64_t> keys;
  for (std::uint64_t k = 0; k < (1u << kVars); ++k)
    if (rng() % 3 == 0) keys.push_back(k);
  if (truth) {
    truth->assign(1u << kVars, false);
    for (auto k : keys) (*truth)[k] = true;
  }
  const auto vars = all_vars();
  return m.from_minterms(keys, vars);
}

}  // namespace

TEST_CASE("apply operators match truth tables") {
  Manager m(kVars);
  std::mt19937_64 rng(1);
  for (int round = 0; round < 50; ++round) {
    std::vector<bool> ta, tb;
    const NodeId a = random_function(m, rng, &ta);
    const NodeId b = random_function(m, rng, &tb);
    CHECK(table(m, a) == ta);
    const auto tand = table(m, m.apply_and(a, b));
    const auto tor = table(m, m.apply_or(a, b));
    const auto tdiff = table(m, m.apply_diff(a, b));
    for (std::size_t x = 0; x < ta.size(); ++x) {
      CHECK(tand[x] == (ta[x] && tb[x]));
      CHECK(tor[x] == (ta[x] || tb[x]));
      CHECK(tdiff[x] == (ta[x] && !tb[x]));
    }
  }
}

TEST_CASE("canonicity: equal functions share a node") {
  Manager m(kVars);
  std::mt19937_64 rng(2);
  for (int round = 0; round < 30; ++round) {
    const NodeId a = random_function(m, rng);
    const NodeId b = random_function(m, rng);
    // De Morgan style identity: a = (a and b) or (a and not b)
    CHECK(m.apply_or(m.apply_and(a, b), m.apply_diff(a, b)) == a);
    CHECK(m.apply_and(a, b) == m.apply_and(b, a));
  }
}

TEST_CASE("exists and and_exists") {
  Manager m(kVars);
  std::mt19937_64 rng(3);
  const std::vector<unsigned> q = {1, 3};
  const NodeId cube = m.cube(q);
  for (int round = 0; round < 30; ++round) {
    std::vector<bool> ta, tb;
    const NodeId a = random_function(m, rng, &ta);
    const NodeId b = random_function(m, rng, &tb);
    const auto te = table(m, m.exists(a, cube));
    const auto tae = table(m, m.and_exists(a, b, cube));
    for (unsigned x = 0; x < ta.size(); ++x) {
      bool any = false, any_and = false;
      for (unsigned bits = 0; bits < 4; ++bits) {
        unsigned y = x;
        y = (y & ~(1u << (kVars - 1 - 1))) | (((bits >> 0) & 1u) << (kVars - 1 - 1));
        y = (y & ~(1u << (kVars - 1 - 3))) | (((bits >> 1) & 1u) << (kVars - 1 - 3));
        any = any || ta[y];
        any_and = any_and || (ta[y] && tb[y]);
      }
      CHECK(te[x] == any);
      CHECK(tae[x] == any_and);
    }
  }
}

TEST_CASE("rename shifts variables") {
  Manager m(4);
  std::vector<unsigned> map = {1, 1, 3, 3};  // 0 -> 1, 2 -> 3
  const unsigned r = m.register_renaming(map);
  const std::vector<unsigned> src = {0, 2}, dst = {1, 3};
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<std::uint64_t> keys;
    for (std::uint64_t k = 0; k < 4; ++k)
      if ((mask >> k) & 1u) keys.push_back(k);
    const NodeId f = m.from_minterms(keys, src);
    const NodeId g = m.from_minterms(keys, dst);
    CHECK(m.rename(f, r) == g);
  }
}

TEST_CASE("minterms, counting and minimum") {
  Manager m(kVars);
  const std::vector<unsigned> vars = {0, 2, 4};
  const std::vector<std::uint64_t> keys = {1, 3, 6};
  const NodeId f = m.from_minterms(keys, vars);
  CHECK(m.minterms(f, vars) == keys);
  CHECK(m.sat_count(f, vars) == 3);
  CHECK(m.min_minterm(f, vars) == 1);
  CHECK(m.sat_count(kTrue, vars) == 8);
  CHECK(m.minterms(kFalse, vars).empty());
}

TEST_CASE("garbage collection keeps roots intact") {
  Manager m(kVars);
  std::mt19937_64 rng(4);
  std::vector<bool> keep_truth;
  const NodeId keep = random_function(m, rng, &keep_truth);
  for (int i = 0; i < 200; ++i) random_function(m, rng);
  const std::size_t before = m.live_nodes();
  const NodeId roots[] = {keep};
  m.collect_garbage(roots);
  CHECK(m.live_nodes() < before);
  CHECK(table(m, keep) == keep_truth);
  // Freed nodes are reused and the table stays canonical.
  std::vector<bool> t2;
  const NodeId again = random_function(m, rng, &t2);
  CHECK(table(m, again) == t2);
  CHECK(m.apply_or(keep, kFalse) == keep);
}
