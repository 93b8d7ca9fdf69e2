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

/// @file oracle.hpp
/// Explicit-state reference implementations. Shares no code with the
/// symbolic path beyond the model types.

#pragma once

#include <string>
#include <vector>

#include "mecdec/explicit_mdp.hpp"
#include "mecdec/mec_engine.hpp"

namespace mecdec {

/// SCCs of g, each sorted, listed by minimum vertex. Iterative, linear time.
std::vector<std::vector<StateId>> tarjan_scc(const ExplicitGraph& g);

struct ExplicitMec {
  std::vector<StateId> states;
  std::vector<StatePair> pairs;
};

struct ExplicitMecSet {
  std::vector<ExplicitMec> mecs;
};

/// Classical decomposition: prune pairs that leave the candidate set and
/// states left without pairs, split by SCCs, repeat until stable.
ExplicitMecSet oracle_mec_decomp(const ExplicitMdp& mdp);

/// Edges of every MEC, canonical order.
MecResult to_mec_result(const ExplicitMdp& mdp, const ExplicitMecSet& mecs);

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks disjointness, closure, strong connectivity, and equality with the oracle.
Verdict verify_mec_result(const ExplicitMdp& mdp, const MecResult& r);

/// Observer that checks the removal and progress lemmas against the oracle.
class LemmaChecker final : public DecompositionObserver {
 public:
  explicit LemmaChecker(const ExplicitMdp& mdp);

  void on_subproblem(const SymbolicBackend& b, const SymbolicGraph& parent,
                     const SymbolicGraph& child) override;
  void on_forward_remainder(const SymbolicBackend& b, const VertexSet& rest,
                            const SymbolicGraph& g) override;
  void on_removed(const SymbolicBackend& b, const VertexSet& states, const PairSet& pairs) override;

  /// Adds soundness findings for a finished result.
  void check_result(const MecResult& r);

  const std::vector<std::string>& violations() const noexcept { return violations_; }
  std::size_t checks() const noexcept { return checks_; }

 private:
  const ExplicitMdp& mdp_;
  std::vector<int> mec_of_state_;
  std::vector<std::vector<bool>> pair_in_mec_;
  std::vector<std::string> violations_;
  std::size_t checks_ = 0;
};

}  // namespace mecdec
