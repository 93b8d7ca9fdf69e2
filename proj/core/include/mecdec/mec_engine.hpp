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

/// @file mec_engine.hpp
/// ROut, attractors, and the two symbolic MEC decomposition algorithms.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mecdec/deadline.hpp"
#include "mecdec/explicit_mdp.hpp"
#include "mecdec/symbolic_backend.hpp"

namespace mecdec {

/// State-action pairs of U that can leave U: one exists plus two basic ops.
PairSet rout(SymbolicBackend& b, const VertexSet& u, const SymbolicGraph& g);

struct AttrResult {
  VertexSet states;
  PairSet pairs;
};

/// Least fixed point (U, X') with X ⊆ X': U collects states whose every
/// enabled pair is in X', X' collects pairs that can move into U.
AttrResult attr(SymbolicBackend& b, const PairSet& x, const SymbolicGraph& g);

struct Mec {
  std::vector<StateId> states;
  std::vector<Edge> edges;
  friend bool operator==(const Mec&, const Mec&) = default;
};

struct MecResult {
  std::vector<Mec> mecs;

  /// Sorts states and edges inside each MEC, then MECs by minimum state.
  void canonicalize();
  friend bool operator==(const MecResult&, const MecResult&) = default;
};

/// Text form: "mec <k>" per component, then "s <ids...>" and "e <s> <a> <t>" lines.
void write_mec_document(std::ostream& out, const MecResult& r);
std::string mec_document(const MecResult& r);
MecResult parse_mec_document(std::string_view text);

/// Hooks fed with uncounted enumerations of intermediate sets. Used for
/// runtime checking; a null observer costs nothing.
class DecompositionObserver {
 public:
  virtual ~DecompositionObserver() = default;
  /// A subproblem carved out of parent is about to be queued.
  virtual void on_subproblem(const SymbolicBackend& /*b*/, const SymbolicGraph& /*parent*/,
                             const SymbolicGraph& /*child*/) {}
  /// F \ C of an INTERLEAVE call, with that call's graph.
  virtual void on_forward_remainder(const SymbolicBackend& /*b*/, const VertexSet& /*rest*/,
                                    const SymbolicGraph& /*g*/) {}
  /// States and pairs discarded by an attractor.
  virtual void on_removed(const SymbolicBackend& /*b*/, const VertexSet& /*states*/,
                          const PairSet& /*pairs*/) {}
};

struct DecomposeOptions {
  /// Start vertex of the top call; min-id Pick when absent.
  std::optional<StateId> start;
  DecompositionObserver* observer = nullptr;
  Deadline deadline;
};

MecResult mec_decomp_basic(SymbolicBackend& b, const SymbolicGraph& g, const DecomposeOptions& opts = {});
MecResult mec_decomp_interleave(SymbolicBackend& b, const SymbolicGraph& g,
                                const DecomposeOptions& opts = {});

enum class Algorithm { kBasic, kInterleave };

std::string_view to_string(Algorithm a) noexcept;
/// Accepts "basic" and "interleave".
Algorithm parse_algorithm(std::string_view text);

struct DecompositionRun {
  MecResult result;
  OpStats stats;
  double wall_time_ms = 0;
};

/// Fresh backend, load G(M), run, canonicalize.
DecompositionRun decompose_with_stats(const ExplicitMdp& mdp, Algorithm algo, BackendKind backend,
                                      const DecomposeOptions& opts = {});

}  // namespace mecdec
