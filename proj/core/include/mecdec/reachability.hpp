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

/// @file reachability.hpp
/// Forward sets, SCC of a vertex, and the SKELETON-style SCC decomposition.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mecdec/deadline.hpp"
#include "mecdec/symbolic_backend.hpp"

namespace mecdec {

struct ForwardResult {
  VertexSet reachable;
  /// A vertex of the last non-empty BFS layer (minimum id of that layer).
  StateId farthest = 0;
};

/// Least fixed point of Post containing v. Costs one Post per BFS layer.
ForwardResult fwd_new_vertex(SymbolicBackend& b, StateId v, const SymbolicGraph& g);

struct SccResult {
  VertexSet scc;
  VertexSet fwd;
  StateId new_start = 0;
};

/// SCC of v, forward set of v, and a vertex at maximum distance from v.
SccResult scc_fwd_new_start(SymbolicBackend& b, StateId v, const SymbolicGraph& g);

using SccCallback = std::function<void(VertexSet&&)>;

/// Streams every SCC of g to the callback. Recursion runs on F \ C (started
/// from the new-start vertex when it lies there) and on V \ F; the larger
/// part is handled iteratively, so nesting depth is logarithmic in |V|.
void for_each_scc(SymbolicBackend& b, const SymbolicGraph& g, std::optional<StateId> start,
                  const SccCallback& emit, const Deadline& deadline = {});

std::vector<VertexSet> skeleton_scc_decomposition(SymbolicBackend& b, const SymbolicGraph& g,
                                                  std::optional<StateId> start = std::nullopt);

}  // namespace mecdec
