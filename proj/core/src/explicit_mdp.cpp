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

#include "mecdec/explicit_mdp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace mecdec {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string format_prob(double p) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), p);
  return std::string(buf, res.ptr);
}

}  // namespace

ExplicitMdp::ExplicitMdp(std::size_t num_states, std::size_t num_actions,
                         std::vector<Transition> transitions, std::vector<InitEntry> init_dist,
                         std::map<ActionId, std::string> action_names)
    : num_states_(num_states),
      num_actions_(num_actions),
      transitions_(std::move(transitions)),
      init_dist_(std::move(init_dist)),
      action_names_(std::move(action_names)) {
  if (num_states_ == 0) throw ValidationError("MDP must have at least one state");
  if (num_actions_ == 0) throw ValidationError("MDP must have at least one action");

  for (const auto& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_)
      throw ValidationError("transition (" + std::to_string(t.src) + ", " + std::to_string(t.act) +
                            ", " + std::to_string(t.dst) + ") has a state id out of range");
    if (t.act >= num_actions_)
      throw ValidationError("transition (" + std::to_string(t.src) + ", " + std::to_string(t.act) +
                            ", " + std::to_string(t.dst) + ") has an action id out of range");
    if (!(t.prob > 0.0) || t.prob > 1.0 + kProbabilityTolerance)
      throw ValidationError("transition (" + std::to_string(t.src) + ", " + std::to_string(t.act) +
                            ", " + std::to_string(t.dst) + ") probability " + format_prob(t.prob) +
                            " is not in (0, 1]");
  }

  std::sort(transitions_.begin(), transitions_.end(), [](const Transition& a, const Transition& b) {
    return std::tie(a.src, a.act, a.dst) < std::tie(b.src, b.act, b.dst);
  });
  for (std::size_t i = 1; i < transitions_.size(); ++i) {
    const auto& a = transitions_[i - 1];
    const auto& b = transitions_[i];
    if (a.src == b.src && a.act == b.act && a.dst == b.dst)
      throw ValidationError("duplicate transition (" + std::to_string(a.src) + ", " +
                            std::to_string(a.act) + ", " + std::to_string(a.dst) + ")");
  }

  std::vector<bool> has_action(num_states_, false);
  std::vector<bool> action_used(num_actions_, false);
  for (std::size_t i = 0; i < transitions_.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < transitions_.size() && transitions_[j].src == transitions_[i].src &&
           transitions_[j].act == transitions_[i].act) {
      sum += transitions_[j].prob;
      ++j;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance)
      throw ValidationError("(" + std::to_string(transitions_[i].src) + ", a" +
                            std::to_string(transitions_[i].act) + ") probabilities sum to " +
                            format_prob(sum));
    has_action[transitions_[i].src] = true;
    action_used[transitions_[i].act] = true;
    i = j;
  }
  for (std::size_t s = 0; s < num_states_; ++s)
    if (!has_action[s]) throw ValidationError("state " + std::to_string(s) + " has no enabled action");
  for (std::size_t a = 0; a < num_actions_; ++a)
    if (!action_used[a])
      throw ValidationError("action " + std::to_string(a) + " is not enabled in any state");

  std::sort(init_dist_.begin(), init_dist_.end(),
            [](const InitEntry& a, const InitEntry& b) { return a.state < b.state; });
  if (!init_dist_.empty()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < init_dist_.size(); ++i) {
      const auto& e = init_dist_[i];
      if (e.state >= num_states_)
        throw ValidationError("initial state " + std::to_string(e.state) + " out of range");
      if (i > 0 && init_dist_[i - 1].state == e.state)
        throw ValidationError("duplicate initial state " + std::to_string(e.state));
      if (!(e.prob > 0.0)) throw ValidationError("initial probability of state " +
                                                 std::to_string(e.state) + " is not positive");
      sum += e.prob;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance)
      throw ValidationError("initial distribution sums to " + format_prob(sum));
  }

  for (const auto& [id, name] : action_names_) {
    if (id >= num_actions_)
      throw ValidationError("action name declared for out-of-range action " + std::to_string(id));
    if (name.empty()) throw ValidationError("empty name for action " + std::to_string(id));
  }
}

std::vector<ActionId> ExplicitMdp::enabled_actions(StateId s) const {
  std::vector<ActionId> out;
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), s,
                             [](const Transition& t, StateId v) { return t.src < v; });
  for (; it != transitions_.end() && it->src == s; ++it)
    if (out.empty() || out.back() != it->act) out.push_back(it->act);
  return out;
}

std::vector<StatePair> ExplicitMdp::enabled_pairs() const {
  std::vector<StatePair> out;
  for (const auto& t : transitions_) {
    StatePair p{t.src, t.act};
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::string ExplicitMdp::action_name(ActionId a) const {
  auto it = action_names_.find(a);
  if (it != action_names_.end()) return it->second;
  return "a" + std::to_string(a);
}

ExplicitGraph underlying_graph(const ExplicitMdp& mdp) {
  ExplicitGraph g;
  g.num_vertices = mdp.num_states();
  g.num_labels = mdp.num_actions();
  g.edges.reserve(mdp.transitions().size());
  for (const auto& t : mdp.transitions())
    if (t.prob > 0.0) g.edges.push_back({t.src, t.act, t.dst});
  return g;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<Token> tokens)
      : line_no_(line_no), tokens_(std::move(tokens)) {}

  std::uint64_t unsigned_at(std::size_t idx, const char* what) const {
    const Token& tok = at(idx, what);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
      throw ParseError(line_no_, tok.column,
                       std::string("expected non-negative integer for ") + what + ", got '" +
                           std::string(tok.text) + "'");
    return v;
  }

  double double_at(std::size_t idx, const char* what) const {
    const Token& tok = at(idx, what);
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || !std::isfinite(v))
      throw ParseError(line_no_, tok.column,
                       std::string("expected number for ") + what + ", got '" +
                           std::string(tok.text) + "'");
    return v;
  }

  const Token& at(std::size_t idx, const char* what) const {
    if (idx >= tokens_.size()) {
      std::size_t col = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
      throw ParseError(line_no_, col, std::string("missing ") + what);
    }
    return tokens_[idx];
  }

  void expect_arity(std::size_t n) const {
    if (tokens_.size() > n)
      throw ParseError(line_no_, tokens_[n].column,
                       "unexpected token '" + std::string(tokens_[n].text) + "'");
  }

  std::string_view keyword() const { return tokens_.front().text; }
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
  std::vector<Token> tokens_;
};

}  // namespace

ExplicitMdp parse_mdp(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Transition> transitions;
  std::vector<InitEntry> init;
  std::map<ActionId, std::string> names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser lp(line_no, std::move(tokens));
    std::string_view kw = lp.keyword();

    if (!header) {
      if (kw != "mdp")
        throw ParseError(line_no, lp.at(0, "keyword").column,
                         "expected header 'mdp <num_states> <num_actions>'");
      auto ns = lp.unsigned_at(1, "number of states");
      auto na = lp.unsigned_at(2, "number of actions");
      lp.expect_arity(3);
      header = {static_cast<std::size_t>(ns), static_cast<std::size_t>(na)};
      continue;
    }

    if (kw == "t") {
      Transition t;
      t.src = static_cast<StateId>(lp.unsigned_at(1, "source state"));
      t.act = static_cast<ActionId>(lp.unsigned_at(2, "action"));
      t.dst = static_cast<StateId>(lp.unsigned_at(3, "destination state"));
      t.prob = lp.double_at(4, "probability");
      lp.expect_arity(5);
      transitions.push_back(t);
    } else if (kw == "init") {
      InitEntry e;
      e.state = static_cast<StateId>(lp.unsigned_at(1, "initial state"));
      e.prob = lp.double_at(2, "initial probability");
      lp.expect_arity(3);
      init.push_back(e);
    } else if (kw == "action") {
      auto id = static_cast<ActionId>(lp.unsigned_at(1, "action id"));
      std::string name(lp.at(2, "action name").text);
      lp.expect_arity(3);
      if (!names.emplace(id, std::move(name)).second)
        throw ParseError(line_no, lp.at(1, "action id").column,
                         "action " + std::to_string(id) + " named twice");
    } else if (kw == "mdp") {
      throw ParseError(line_no, lp.at(0, "keyword").column, "duplicate 'mdp' header");
    } else {
      throw ParseError(line_no, lp.at(0, "keyword").column,
                       "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!header) throw ParseError(line_no, 1, "missing 'mdp' header");
  return ExplicitMdp(header->first, header->second, std::move(transitions), std::move(init),
                     std::move(names));
}

ExplicitMdp load_mdp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mdp(ss.str());
}

std::string serialize_mdp(const ExplicitMdp& mdp) {
  std::string out;
  out += "mdp " + std::to_string(mdp.num_states()) + " " + std::to_string(mdp.num_actions()) + "\n";
  for (const auto& [id, name] : mdp.action_names())
    out += "action " + std::to_string(id) + " " + name + "\n";
  for (const auto& e : mdp.init_dist())
    out += "init " + std::to_string(e.state) + " " + format_prob(e.prob) + "\n";
  for (const auto& t : mdp.transitions())
    out += "t " + std::to_string(t.src) + " " + std::to_string(t.act) + " " +
           std::to_string(t.dst) + " " + format_prob(t.prob) + "\n";
  return out;
}

}  // namespace mecdec
