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

#include "mecdec/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mecdec {

namespace {

// The standard distributions are implementation-defined; these helpers only
// consume raw engine output so instances are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    // Lemire's nearly-divisionless bounded draw, rejection variant.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = engine_();
      unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
      if (static_cast<std::uint64_t>(m) >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return p >= 1.0 || unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

void add_uniform(std::vector<Transition>& out, StateId s, ActionId a,
                 const std::vector<StateId>& dsts) {
  const double p = 1.0 / static_cast<double>(dsts.size());
  for (StateId d : dsts) out.push_back({s, a, d, p});
}

}  // namespace

void GeneratorParams::validate() const {
  if (num_states == 0) throw std::invalid_argument("num_states must be positive");
  if (num_actions == 0) throw std::invalid_argument("num_actions must be positive");
  if (!(enable_p > 0.0 && enable_p <= 1.0)) throw std::invalid_argument("enable_p must be in (0, 1]");
  if (branch_min == 0 || branch_min > branch_max)
    throw std::invalid_argument("branching range must satisfy 1 <= branch_min <= branch_max");
}

ExplicitMdp generate_random(const GeneratorParams& params) {
  params.validate();
  Rng rng(params.seed);
  const std::size_t n = params.num_states;
  const std::size_t k = params.num_actions;

  std::vector<std::vector<bool>> enabled(n, std::vector<bool>(k, false));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t a = 0; a < k; ++a) enabled[s][a] = rng.chance(params.enable_p);

  for (std::size_t s = 0; s < n; ++s)
    if (std::none_of(enabled[s].begin(), enabled[s].end(), [](bool b) { return b; }))
      enabled[s][rng.below(k)] = true;
  for (std::size_t a = 0; a < k; ++a) {
    bool used = false;
    for (std::size_t s = 0; s < n && !used; ++s) used = enabled[s][a];
    if (!used) enabled[rng.below(n)][a] = true;
  }

  std::vector<StateId> all(n);
  std::iota(all.begin(), all.end(), StateId{0});
  std::vector<Transition> transitions;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!enabled[s][a]) continue;
      const std::size_t hi = std::min(params.branch_max, n);
      const std::size_t lo = std::min(params.branch_min, hi);
      const std::size_t b = rng.between(lo, hi);
      // Partial Fisher-Yates for b distinct destinations.
      std::vector<StateId> pool = all;
      for (std::size_t i = 0; i < b; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      std::vector<StateId> dsts(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(b));
      std::sort(dsts.begin(), dsts.end());
      add_uniform(transitions, static_cast<StateId>(s), static_cast<ActionId>(a), dsts);
    }
  }
  return ExplicitMdp(n, k, std::move(transitions));
}

ExplicitMdp chain_of_cycles(std::size_t num_cycles, std::size_t cycle_len) {
  if (num_cycles == 0 || cycle_len == 0)
    throw std::invalid_argument("chain_of_cycles needs positive sizes");
  std::vector<Transition> t;
  const std::size_t n = num_cycles * cycle_len;
  for (std::size_t c = 0; c < num_cycles; ++c) {
    const auto base = static_cast<StateId>(c * cycle_len);
    for (std::size_t j = 0; j < cycle_len; ++j) {
      const auto s = static_cast<StateId>(base + j);
      const auto next = static_cast<StateId>(base + (j + 1) % cycle_len);
      t.push_back({s, 0, next, 1.0});
    }
    if (c + 1 < num_cycles) {
      const auto next_ring = static_cast<StateId>(base + cycle_len);
      if (cycle_len == 1) {
        t.push_back({base, 1, next_ring, 1.0});
      } else {
        t.push_back({base, 1, static_cast<StateId>(base + 1), 0.5});
        t.push_back({base, 1, next_ring, 0.5});
      }
    }
  }
  // A single ring has no chain action, so action 1 would be unused.
  const std::size_t actions = num_cycles > 1 ? 2 : 1;
  return ExplicitMdp(n, actions, std::move(t));
}

ExplicitMdp path_of_sccs(std::size_t num_sccs, std::size_t scc_size) {
  if (num_sccs == 0 || scc_size == 0) throw std::invalid_argument("path_of_sccs needs positive sizes");
  std::vector<Transition> t;
  for (std::size_t c = 0; c < num_sccs; ++c) {
    const auto base = static_cast<StateId>(c * scc_size);
    for (std::size_t j = 0; j < scc_size; ++j)
      t.push_back({static_cast<StateId>(base + j), 0,
                   static_cast<StateId>(base + (j + 1) % scc_size), 1.0});
    if (c + 1 < num_sccs)
      t.push_back({static_cast<StateId>(base + scc_size - 1), 1,
                   static_cast<StateId>(base + scc_size), 1.0});
  }
  return ExplicitMdp(num_sccs * scc_size, num_sccs > 1 ? 2 : 1, std::move(t));
}

ExplicitMdp chain_of_sccs_with_cross_edges(const CrossChainParams& params) {
  if (params.num_blocks == 0 || params.block_min == 0 || params.block_min > params.block_max)
    throw std::invalid_argument("invalid cross-chain parameters");
  Rng rng(params.seed);

  std::vector<std::size_t> sizes(params.num_blocks);
  for (auto& sz : sizes) sz = rng.between(params.block_min, params.block_max);
  std::vector<std::size_t> offset(params.num_blocks + 1, 0);
  for (std::size_t b = 0; b < params.num_blocks; ++b) offset[b + 1] = offset[b] + sizes[b];
  const std::size_t n = offset.back() + 1;
  const std::size_t sink = n - 1;

  std::vector<StateId> perm(n);
  std::iota(perm.begin(), perm.end(), StateId{0});
  rng.shuffle(perm);

  // Action 0: ring step. Action 1: forward into the next block.
  // Action 2: backward split between the previous block and the sink.
  std::vector<Transition> t;
  auto add = [&](std::size_t s, ActionId a, std::size_t d, double p) {
    t.push_back({perm[s], a, perm[d], p});
  };
  for (std::size_t b = 0; b < params.num_blocks; ++b) {
    const std::size_t base = offset[b];
    const std::size_t len = sizes[b];
    for (std::size_t j = 0; j < len; ++j) add(base + j, 0, base + (j + 1) % len, 1.0);
    if (b + 1 < params.num_blocks) add(base + rng.below(len), 1, offset[b + 1] + rng.below(sizes[b + 1]), 1.0);
    if (b > 0) {
      const std::size_t from = base + rng.below(len);
      add(from, 2, offset[b - 1] + rng.below(sizes[b - 1]), 0.5);
      add(from, 2, sink, 0.5);
    }
  }
  add(sink, 0, sink, 1.0);

  std::size_t actions = 1;
  if (params.num_blocks > 1) actions = 3;
  return ExplicitMdp(n, actions, std::move(t));
}

std::vector<std::string> builtin_example_names() { return {"fig1", "selfloop1"}; }

ExplicitMdp builtin_example(std::string_view name) {
  if (name == "fig1") {
    // States P1..P6 -> 0..5. Actions alpha1..alpha6 -> 0..5, beta2 -> 6,
    // beta4 -> 7. The split of beta4 only matters through its support.
    enum : StateId { P1, P2, P3, P4, P5, P6 };
    enum : ActionId { A1, A2, A3, A4, A5, A6, B2, B4 };
    std::vector<Transition> t = {
        {P1, A1, P2, 1.0}, {P2, A2, P1, 1.0}, {P2, B2, P4, 1.0}, {P4, B4, P2, 0.5},
        {P4, B4, P5, 0.5}, {P3, A3, P4, 1.0}, {P4, A4, P6, 1.0}, {P6, A6, P3, 1.0},
        {P5, A5, P5, 1.0},
    };
    std::map<ActionId, std::string> names = {{A1, "alpha1"}, {A2, "alpha2"}, {A3, "alpha3"},
                                             {A4, "alpha4"}, {A5, "alpha5"}, {A6, "alpha6"},
                                             {B2, "beta2"},  {B4, "beta4"}};
    return ExplicitMdp(6, 8, std::move(t), {}, std::move(names));
  }
  if (name == "selfloop1") return ExplicitMdp(1, 1, {{0, 0, 0, 1.0}});

  std::string known;
  for (const auto& n : builtin_example_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown example '" + std::string(name) + "' (registered: " + known + ")");
}

}  // namespace mecdec
