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

#include "brute_force.hpp"
#include "mecdec/explicit_mdp.hpp"
#include "mecdec/generators.hpp"

using namespace mecdec;

TEST_CASE("parse reads header, names, init and transitions") {
  const auto m = parse_mdp(
      "# two states\n"
      "mdp 2 2\n"
      "action 1 go\n"
      "init 0 1\n"
      "t 0 0 0 1\n"
      "t 0 1 1 0.25\n"
      "t 0 1 0 0.75  # split\n"
      "t 1 1 1 1\n");
  CHECK(m.num_states() == 2);
  CHECK(m.num_actions() == 2);
  CHECK(m.transitions().size() == 4);
  CHECK(m.action_name(1) == "go");
  CHECK(m.action_name(0) == "a0");
  CHECK(m.enabled_actions(0) == std::vector<ActionId>{0, 1});
  CHECK(m.enabled_actions(1) == std::vector<ActionId>{1});
  REQUIRE(m.init_dist().size() == 1);
  // canonical order
  CHECK(m.transitions()[1].dst == 0);
  CHECK(m.transitions()[1].act == 1);
}

TEST_CASE("serialize round-trips") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = testing::random_mdp(seed);
    CHECK(parse_mdp(serialize_mdp(m)) == m);
  }
  const auto fig = builtin_example("fig1");
  CHECK(parse_mdp(serialize_mdp(fig)) == fig);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_mdp("mdp 2 1\nt 0 0 1 1\nbogus 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_mdp("t 0 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_mdp(""), ParseError);
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nmdp 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nt 0 0 x 1\n"), ParseError);
}

TEST_CASE("validation rejects malformed models") {
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nt 0 0 0 0.5\n"), ValidationError);        // mass
  CHECK_THROWS_AS(parse_mdp("mdp 2 1\nt 0 0 0 1\n"), ValidationError);          // state 1 has no action
  CHECK_THROWS_AS(parse_mdp("mdp 1 2\nt 0 0 0 1\n"), ValidationError);          // action 1 unused
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nt 0 0 3 1\n"), ValidationError);          // range
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nt 0 0 0 1\nt 0 0 0 1\n"), ValidationError);  // duplicate
  CHECK_THROWS_AS(parse_mdp("mdp 1 1\nt 0 0 0 1\ninit 0 0.5\n"), ValidationError);
  CHECK_THROWS_AS(parse_mdp("mdp 0 1\n"), ValidationError);
}

TEST_CASE("underlying graph has one edge per transition") {
  const auto m = builtin_example("fig1");
  const auto g = underlying_graph(m);
  CHECK(g.num_vertices == 6);
  CHECK(g.num_labels == 8);
  CHECK(g.edges.size() == m.transitions().size());
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
}

TEST_CASE("load_mdp_file reports missing files") {
  CHECK_THROWS_AS(load_mdp_file("/nonexistent/none.mdp"), std::runtime_error);
}
