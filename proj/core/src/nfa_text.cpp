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

#include <sstream>

#include "pushin/nfa.hpp"
#include "text_util.hpp"

namespace pushin {

std::string to_text(const Nfa& nfa) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : nfa.alphabet()) out << ' ' << s;
  out << "\nstates " << nfa.num_states() << "\ninitial " << nfa.initial() << "\naccepting";
  for (State s = 0; s < nfa.num_states(); ++s) {
    if (nfa.is_accepting(s)) out << ' ' << s;
  }
  out << '\n';
  for (const Transition& t : nfa.transitions()) {
    out << "trans " << t.source << ' '
        << (t.label == kEpsilon ? std::string(kEpsilonToken)
                                : nfa.alphabet()[static_cast<std::size_t>(t.label)])
        << ' ' << t.target << '\n';
  }
  return out.str();
}

Nfa parse_nfa(std::string_view text, const std::string& source) {
  using detail::Line;
  auto lines = detail::tokenize_lines(text);

  const Line* alphabet_line = nullptr;
  const Line* states_line = nullptr;
  for (const Line& line : lines) {
    const std::string& key = line.tokens[0].text;
    if (key == "alphabet") {
      if (alphabet_line) throw ParseError(source, line.number, 1, "duplicate 'alphabet'");
      alphabet_line = &line;
    } else if (key == "states") {
      if (states_line) throw ParseError(source, line.number, 1, "duplicate 'states'");
      states_line = &line;
    }
  }
  if (!alphabet_line) throw ParseError(source, 1, 1, "missing 'alphabet' declaration");
  if (!states_line) throw ParseError(source, 1, 1, "missing 'states' declaration");

  std::vector<std::string> names;
  for (std::size_t i = 1; i < alphabet_line->tokens.size(); ++i) {
    const auto& tok = alphabet_line->tokens[i];
    if (!is_valid_symbol_name(tok.text)) {
      throw ParseError(source, alphabet_line->number, tok.column,
                       "invalid action name '" + tok.text + "'");
    }
    names.push_back(tok.text);
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const ContractViolation& e) {
    throw ParseError(source, alphabet_line->number, 1, e.what());
  }
  if (states_line->tokens.size() != 2) {
    throw ParseError(source, states_line->number, 1, "expected 'states <count>'");
  }
  std::size_t count = detail::parse_count(states_line->tokens[1], states_line->number, source);
  if (count == 0) {
    throw ParseError(source, states_line->number, states_line->tokens[1].column,
                     "an automaton needs at least one state");
  }
  Nfa nfa(alphabet, count);

  auto state_at = [&](const Line& line, std::size_t i) {
    std::size_t s = detail::parse_count(line.tokens[i], line.number, source);
    if (s >= count) {
      throw ParseError(source, line.number, line.tokens[i].column,
                       "state " + line.tokens[i].text + " out of range");
    }
    return static_cast<State>(s);
  };

  for (const Line& line : lines) {
    const std::string& key = line.tokens[0].text;
    if (key == "alphabet" || key == "states") continue;
    if (key == "initial") {
      if (line.tokens.size() != 2) throw ParseError(source, line.number, 1, "expected 'initial <state>'");
      nfa.set_initial(state_at(line, 1));
    } else if (key == "accepting") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) nfa.set_accepting(state_at(line, i));
    } else if (key == "trans") {
      if (line.tokens.size() != 4) {
        throw ParseError(source, line.number, 1, "expected 'trans <src> <action|eps> <dst>'");
      }
      const auto& label = line.tokens[2];
      if (label.text != kEpsilonToken && !alphabet.contains(label.text)) {
        throw ParseError(source, line.number, label.column,
                         "action '" + label.text + "' not in alphabet");
      }
      nfa.add_transition(state_at(line, 1), label.text, state_at(line, 3));
    } else {
      throw ParseError(source, line.number, 1, "unknown declaration '" + key + "'");
    }
  }
  return nfa;
}

}  // namespace pushin
