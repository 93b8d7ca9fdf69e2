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

/// @file generators.hpp
/// Random and structured MDP instances, plus the built-in named examples.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mecdec/explicit_mdp.hpp"

namespace mecdec {

struct GeneratorParams {
  std::size_t num_states = 10;
  std::size_t num_actions = 2;
  /// Probability that a given action is enabled in a given state, in (0, 1].
  double enable_p = 0.5;
  std::size_t branch_min = 1;
  std::size_t branch_max = 2;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Pure function of `params`. A repair pass forces at least one enabled
/// action per state and at least one enabling state per action.
ExplicitMdp generate_random(const GeneratorParams& params);

/// `num_cycles` rings of `cycle_len` states joined into a chain. Action 0
/// walks each ring; the entry state of every ring but the last also has
/// action 1, which splits between its ring successor and the next ring.
/// Every ring is exactly one MEC.
ExplicitMdp chain_of_cycles(std::size_t num_cycles, std::size_t cycle_len);

/// A path of `num_sccs` rings of `scc_size` states with a deterministic
/// action from each ring into the next. Stresses recursion depth.
ExplicitMdp path_of_sccs(std::size_t num_sccs, std::size_t scc_size);

struct CrossChainParams {
  std::size_t num_blocks = 6;
  std::size_t block_min = 2;
  std::size_t block_max = 6;
  std::uint64_t seed = 0;
};

/// Chain of strongly connected blocks joined by forward actions, plus
/// backward actions that split between the previous block and a shared
/// absorbing sink. The underlying graph is one large SCC but only the
/// blocks (and the sink) are MECs, which makes SCC-first decomposition
/// repeat its work. State ids are shuffled by the seed.
ExplicitMdp chain_of_sccs_with_cross_edges(const CrossChainParams& params);

/// Names accepted by builtin_example, sorted.
std::vector<std::string> builtin_example_names();

/// "fig1": the six-state, eight-action running example (states P1..P6 are
/// ids 0..5). "selfloop1": one state with one self-loop action. Throws
/// std::invalid_argument listing the registered names otherwise.
ExplicitMdp builtin_example(std::string_view name);

}  // namespace mecdec
