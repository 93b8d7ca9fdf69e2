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

/// @file explicit_mdp.hpp
/// Explicit MDP representation, its underlying labelled graph, and the
/// native line-oriented text format.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mecdec {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// A state-action pair (s, a).
struct StatePair {
  StateId state = 0;
  ActionId action = 0;

  friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

/// A labelled edge (src, label, dst) of an underlying graph.
struct Edge {
  StateId src = 0;
  ActionId label = 0;
  StateId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Transition {
  StateId src = 0;
  ActionId act = 0;
  StateId dst = 0;
  double prob = 0.0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct InitEntry {
  StateId state = 0;
  double prob = 0.0;

  friend bool operator==(const InitEntry&, const InitEntry&) = default;
};

/// Thrown when a document is not in the native MDP format. Carries the
/// 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Thrown when an MDP violates one of the model invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance for "probabilities of an enabled action sum to one".
inline constexpr double kProbabilityTolerance = 1e-9;

/// Validated, immutable MDP. Transitions are kept in canonical
/// (src, act, dst) order; probabilities are retained for serialization only.
class ExplicitMdp {
 public:
  /// Validates and canonicalizes. Throws ValidationError naming the first
  /// violated invariant.
  ExplicitMdp(std::size_t num_states, std::size_t num_actions,
              std::vector<Transition> transitions,
              std::vector<InitEntry> init_dist = {},
              std::map<ActionId, std::string> action_names = {});

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_actions() const noexcept { return num_actions_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::vector<InitEntry>& init_dist() const noexcept { return init_dist_; }
  const std::map<ActionId, std::string>& action_names() const noexcept { return action_names_; }

  /// Actions enabled in `s`, ascending.
  std::vector<ActionId> enabled_actions(StateId s) const;

  /// All enabled (s, a) pairs, ascending.
  std::vector<StatePair> enabled_pairs() const;

  /// Display name of an action: its declared name, or "a<id>".
  std::string action_name(ActionId a) const;

  friend bool operator==(const ExplicitMdp&, const ExplicitMdp&) = default;

 private:
  std::size_t num_states_;
  std::size_t num_actions_;
  std::vector<Transition> transitions_;
  std::vector<InitEntry> init_dist_;
  std::map<ActionId, std::string> action_names_;
};

/// Underlying labelled graph G(M): one edge per positive-probability
/// transition, sorted.
struct ExplicitGraph {
  std::size_t num_vertices = 0;
  std::size_t num_labels = 0;
  std::vector<Edge> edges;

  friend bool operator==(const ExplicitGraph&, const ExplicitGraph&) = default;
};

ExplicitGraph underlying_graph(const ExplicitMdp& mdp);

ExplicitMdp parse_mdp(std::string_view text);
ExplicitMdp load_mdp_file(const std::string& path);

/// Canonical serialization: header, action names, init entries, then
/// transitions sorted by (src, act, dst). Probabilities use the shortest
/// round-tripping decimal form.
std::string serialize_mdp(const ExplicitMdp& mdp);

}  // namespace mecdec
