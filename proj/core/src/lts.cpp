// Copyright 2026 The Pushin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pushin/lts.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pushin/automata.hpp"
#include "pushin/error.hpp"
#include "text_util.hpp"

namespace pushin {

Unit::Unit(std::string name, Alphabet inputs, Alphabet outputs)
    : name_(std::move(name)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  if (inputs_.intersects(outputs_)) {
    throw ContractViolation("unit " + name_ + ": inputs " + to_string(inputs_) +
                            " and outputs " + to_string(outputs_) + " overlap");
  }
  interface_ = inputs_.unite(outputs_);
}

State Unit::state(std::string_view name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) {
    throw ContractViolation("unit " + name_ + " has no state '" + std::string(name) + "'");
  }
  return it->second;
}

bool Unit::has_state(std::string_view name) const {
  return state_index_.find(name) != state_index_.end();
}

State Unit::add_state(std::string name) {
  if (state_index_.count(name) != 0) {
    throw ContractViolation("unit " + name_ + ": duplicate state '" + name + "'");
  }
  auto s = static_cast<State>(state_names_.size());
  state_index_.emplace(name, s);
  state_names_.push_back(std::move(name));
  return s;
}

void Unit::set_initial(State s) {
  if (s >= num_states()) throw ContractViolation("unit " + name_ + ": initial state out of range");
  initial_ = s;
}

State Unit::initial() const {
  if (state_names_.empty()) throw ContractViolation("unit " + name_ + " has no states");
  return initial_;
}

void Unit::add_transition(State source, Label label, State target) {
  if (source >= num_states() || target >= num_states()) {
    throw ContractViolation("unit " + name_ + ": transition endpoint out of range");
  }
  if (label != kEpsilon && (label < 0 || static_cast<std::size_t>(label) >= interface_.size())) {
    throw ContractViolation("unit " + name_ + ": transition label outside interface");
  }
  transitions_.push_back(Transition{source, label, target});
}

void Unit::add_transition(std::string_view source, std::string_view action,
                          std::string_view target) {
  Label label = kEpsilon;
  if (action != kEpsilonToken) {
    auto index = interface_.index_of(action);
    if (!index) {
      throw ContractViolation("unit " + name_ + ": action '" + std::string(action) +
                              "' not in interface " + to_string(interface_));
    }
    label = static_cast<Label>(*index);
  }
  add_transition(state(source), label, state(target));
}

Nfa lts_to_nfa(const Unit& unit) {
  Nfa nfa(unit.interface(), unit.num_states());
  nfa.set_initial(unit.initial());
  for (State s = 0; s < unit.num_states(); ++s) nfa.set_accepting(s);
  for (const Transition& t : unit.transitions()) nfa.add_transition(t.source, t.label, t.target);
  return nfa;
}

bool bbtest(const Unit& unit, const Word& behavior) {
  return accepts(lts_to_nfa(unit), behavior);
}

Unit compose(std::span<const Unit> units) {
  if (units.empty()) throw ContractViolation("compose: no units");
  std::string name;
  Alphabet inputs;
  Alphabet outputs;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (units[i].name() == units[j].name()) {
        throw ContractViolation("compose: duplicate unit name '" + units[i].name() + "'");
      }
    }
    name += (i == 0 ? "" : "*") + units[i].name();
    inputs = inputs.unite(units[i].inputs());
    outputs = outputs.unite(units[i].outputs());
  }
  Unit result(name, inputs.minus(outputs), outputs);
  const Alphabet& sigma = result.interface();
  const std::size_t m = units.size();

  // Per unit and state: internal successors, and successors by global label.
  struct LocalMoves {
    std::vector<State> internal;
    std::vector<std::vector<State>> by_label;
  };
  std::vector<std::vector<LocalMoves>> moves(m);
  std::vector<std::vector<std::size_t>> signature(sigma.size());
  for (std::size_t u = 0; u < m; ++u) {
    const Unit& unit = units[u];
    moves[u].assign(unit.num_states(), LocalMoves{{}, std::vector<std::vector<State>>(sigma.size())});
    std::vector<Label> to_global(unit.interface().size());
    for (std::size_t i = 0; i < unit.interface().size(); ++i) {
      auto g = *sigma.index_of(unit.interface()[i]);
      to_global[i] = static_cast<Label>(g);
      signature[g].push_back(u);
    }
    for (const Transition& t : unit.transitions()) {
      if (t.label == kEpsilon) {
        moves[u][t.source].internal.push_back(t.target);
      } else {
        moves[u][t.source].by_label[static_cast<std::size_t>(to_global[static_cast<std::size_t>(t.label)])]
            .push_back(t.target);
      }
    }
  }

  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> tuples;
  auto intern = [&](std::vector<State> tuple) {
    auto it = ids.find(tuple);
    if (it != ids.end()) return it->second;
    std::string state_name;
    for (std::size_t u = 0; u < m; ++u) {
      state_name += (u == 0 ? "" : "|") + units[u].state_name(tuple[u]);
    }
    State s = result.add_state(state_name);
    ids.emplace(tuple, s);
    tuples.push_back(std::move(tuple));
    return s;
  };

  std::vector<State> start(m);
  for (std::size_t u = 0; u < m; ++u) start[u] = units[u].initial();
  intern(start);

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::vector<State> current = tuples[i];
    for (std::size_t u = 0; u < m; ++u) {
      for (State t : moves[u][current[u]].internal) {
        std::vector<State> next = current;
        next[u] = t;
        State target = intern(std::move(next));
        result.add_transition(static_cast<State>(i), kEpsilon, target);
      }
    }
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      const auto& members = signature[a];
      bool enabled = std::all_of(members.begin(), members.end(), [&](std::size_t u) {
        return !moves[u][current[u]].by_label[a].empty();
      });
      if (!enabled) continue;
      // Odometer over the choices of every participating unit.
      std::vector<std::size_t> choice(members.size(), 0);
      while (true) {
        std::vector<State> next = current;
        for (std::size_t k = 0; k < members.size(); ++k) {
          next[members[k]] = moves[members[k]][current[members[k]]].by_label[a][choice[k]];
        }
        State target = intern(std::move(next));
        result.add_transition(static_cast<State>(i), static_cast<Label>(a), target);
        std::size_t k = 0;
        for (; k < members.size(); ++k) {
          if (++choice[k] < moves[members[k]][current[members[k]]].by_label[a].size()) break;
          choice[k] = 0;
        }
        if (k == members.size()) break;
      }
    }
  }
  return result;
}

std::set<Word> observable_behaviors_upto(const Unit& unit, std::size_t max_length) {
  Nfa nfa = lts_to_nfa(unit);
  NfaRunner runner(nfa);
  std::set<Word> result;
  std::vector<std::pair<Word, StateSet>> frontier{{Word{}, runner.start()}};
  result.insert(Word{});
  for (std::size_t len = 0; len < max_length && !frontier.empty(); ++len) {
    std::vector<std::pair<Word, StateSet>> next;
    for (const auto& [word, states] : frontier) {
      for (std::size_t c = 0; c < nfa.alphabet().size(); ++c) {
        StateSet after = runner.step(states, static_cast<Label>(c));
        if (after.empty()) continue;
        Word longer = word;
        longer.push_back(nfa.alphabet()[c]);
        result.insert(longer);
        next.emplace_back(std::move(longer), std::move(after));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

Unit parse_unit(std::string_view text, const std::string& source) {
  using detail::Line;
  auto lines = detail::tokenize_lines(text);

  auto find = [&](const char* key) -> const Line* {
    const Line* found = nullptr;
    for (const Line& line : lines) {
      if (line.tokens[0].text != key) continue;
      if (found) throw ParseError(source, line.number, 1, std::string("duplicate '") + key + "'");
      found = &line;
    }
    return found;
  };
  auto names_of = [&](const Line* line) {
    std::vector<std::string> names;
    if (!line) return names;
    for (std::size_t i = 1; i < line->tokens.size(); ++i) {
      const auto& tok = line->tokens[i];
      if (!is_valid_symbol_name(tok.text)) {
        throw ParseError(source, line->number, tok.column, "invalid name '" + tok.text + "'");
      }
      names.push_back(tok.text);
    }
    return names;
  };

  const Line* unit_line = find("unit");
  if (!unit_line || unit_line->tokens.size() != 2) {
    throw ParseError(source, unit_line ? unit_line->number : 1, 1, "expected 'unit <Name>'");
  }
  const Line* inputs_line = find("inputs");
  const Line* outputs_line = find("outputs");
  const Line* states_line = find("states");
  const Line* initial_line = find("initial");
  if (!states_line || states_line->tokens.size() < 2) {
    throw ParseError(source, states_line ? states_line->number : 1, 1,
                     "expected 'states <names...>'");
  }

  auto make_alphabet = [&](const Line* line) {
    try {
      return Alphabet(names_of(line));
    } catch (const ContractViolation& e) {
      throw ParseError(source, line->number, 1, e.what());
    }
  };
  Alphabet inputs = make_alphabet(inputs_line);
  Alphabet outputs = make_alphabet(outputs_line);
  if (inputs.intersects(outputs)) {
    throw ParseError(source, outputs_line->number, 1,
                     "actions " + to_string(inputs.intersect(outputs)) +
                         " declared both as inputs and outputs");
  }
  Unit unit(unit_line->tokens[1].text, inputs, outputs);
  for (std::size_t i = 1; i < states_line->tokens.size(); ++i) {
    const auto& tok = states_line->tokens[i];
    if (unit.has_state(tok.text)) {
      throw ParseError(source, states_line->number, tok.column, "duplicate state '" + tok.text + "'");
    }
    unit.add_state(tok.text);
  }
  auto state_at = [&](const Line& line, std::size_t i) {
    const auto& tok = line.tokens[i];
    if (!unit.has_state(tok.text)) {
      throw ParseError(source, line.number, tok.column, "unknown state '" + tok.text + "'");
    }
    return unit.state(tok.text);
  };
  if (initial_line) {
    if (initial_line->tokens.size() != 2) {
      throw ParseError(source, initial_line->number, 1, "expected 'initial <state>'");
    }
    unit.set_initial(state_at(*initial_line, 1));
  }

  for (const Line& line : lines) {
    const std::string& key = line.tokens[0].text;
    if (key == "unit" || key == "inputs" || key == "outputs" || key == "states" ||
        key == "initial") {
      continue;
    }
    if (key != "trans") throw ParseError(source, line.number, 1, "unknown declaration '" + key + "'");
    if (line.tokens.size() != 4) {
      throw ParseError(source, line.number, 1, "expected 'trans <src> <action|eps> <dst>'");
    }
    const auto& action = line.tokens[2];
    if (action.text != kEpsilonToken && !unit.interface().contains(action.text)) {
      throw ParseError(source, line.number, action.column,
                       "action '" + action.text + "' not in the interface of " + unit.name());
    }
    Label label = action.text == kEpsilonToken
                      ? kEpsilon
                      : static_cast<Label>(*unit.interface().index_of(action.text));
    unit.add_transition(state_at(line, 1), label, state_at(line, 3));
  }
  return unit;
}

std::string to_text(const Unit& unit) {
  std::ostringstream out;
  out << "unit " << unit.name() << "\ninputs";
  for (const auto& a : unit.inputs()) out << ' ' << a;
  out << "\noutputs";
  for (const auto& a : unit.outputs()) out << ' ' << a;
  out << "\nstates";
  for (State s = 0; s < unit.num_states(); ++s) out << ' ' << unit.state_name(s);
  out << "\ninitial " << unit.state_name(unit.initial()) << '\n';
  for (const Transition& t : unit.transitions()) {
    out << "trans " << unit.state_name(t.source) << ' '
        << (t.label == kEpsilon ? std::string(kEpsilonToken)
                                : unit.interface()[static_cast<std::size_t>(t.label)])
        << ' ' << unit.state_name(t.target) << '\n';
  }
  return out.str();
}

}  // namespace pushin
