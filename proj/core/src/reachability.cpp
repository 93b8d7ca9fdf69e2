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

#include "mecdec/reachability.hpp"

#include <algorithm>

namespace mecdec {

ForwardResult fwd_new_vertex(SymbolicBackend& b, StateId v, const SymbolicGraph& g) {
  VertexSet reach = b.make_vertices({});
  VertexSet last = b.make_vertices({});
  VertexSet layer = b.make_singleton(v);
  while (!b.is_empty(layer)) {
    reach = b.unite(reach, layer);
    VertexSet next = b.post(layer, g);
    last = std::move(layer);
    layer = b.subtract(next, reach);
  }
  ForwardResult r;
  r.farthest = b.pick(last);
  r.reachable = std::move(reach);
  return r;
}

SccResult scc_fwd_new_start(SymbolicBackend& b, StateId v, const SymbolicGraph& g) {
  ForwardResult fwd = fwd_new_vertex(b, v, g);
  VertexSet scc = b.make_singleton(v);
  for (;;) {
    VertexSet back = b.pre(scc, g);
    VertexSet inside = b.intersect(back, fwd.reachable);
    back.reset();
    VertexSet grown = b.unite(scc, inside);
    if (b.equal(grown, scc)) break;
    scc = std::move(grown);
  }
  return {std::move(scc), std::move(fwd.reachable), fwd.farthest};
}

namespace {

struct Part {
  SymbolicGraph g;
  std::optional<StateId> start;
  std::size_t size = 0;
};

void skeleton(SymbolicBackend& b, SymbolicGraph g, std::optional<StateId> start, const SccCallback& emit,
              const Deadline& deadline) {
  auto frame = b.frame();
  for (;;) {
    deadline.check();
    if (b.is_empty(g.vertices)) return;
    const StateId v = start ? *start : b.pick(g.vertices);
    SccResult r = scc_fwd_new_start(b, v, g);

    std::vector<Part> parts;
    VertexSet rest = b.subtract(r.fwd, r.scc);
    if (!b.is_empty(rest)) {
      Relation e = b.restrict(g.edges, rest);
      std::optional<StateId> s;
      if (b.contains(rest, r.new_start)) s = r.new_start;
      parts.push_back({{std::move(rest), std::move(e)}, s});
    }
    VertexSet outside = b.complement_within(r.fwd, g.vertices);
    r.fwd.reset();
    if (!b.is_empty(outside)) {
      Relation e = b.restrict(g.edges, outside);
      parts.push_back({{std::move(outside), std::move(e)}, std::nullopt});
    }
    g = {};
    emit(std::move(r.scc));
    if (parts.empty()) return;

    for (auto& p : parts) p.size = b.cardinality(p.g.vertices);
    std::stable_sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) { return x.size < y.size; });
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      skeleton(b, std::move(parts[i].g), parts[i].start, emit, deadline);
      parts[i].g = {};
    }
    g = std::move(parts.back().g);
    start = parts.back().start;
  }
}

}  // namespace

void for_each_scc(SymbolicBackend& b, const SymbolicGraph& g, std::optional<StateId> start,
                  const SccCallback& emit, const Deadline& deadline) {
  skeleton(b, {b.copy(g.vertices), b.copy(g.edges)}, start, emit, deadline);
}

std::vector<VertexSet> skeleton_scc_decomposition(SymbolicBackend& b, const SymbolicGraph& g,
                                                  std::optional<StateId> start) {
  std::vector<VertexSet> out;
  for_each_scc(b, g, start, [&](VertexSet&& c) { out.push_back(std::move(c)); });
  return out;
}

}  // namespace mecdec
