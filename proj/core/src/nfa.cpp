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

#include "pushin/nfa.hpp"

#include <algorithm>

#include "pushin/error.hpp"

namespace pushin {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

OracleError::OracleError(std::vector<std::string> word, const std::string& message)
    : std::runtime_error("oracle failed on '" + to_string(word) + "': " + message),
      word_(std::move(word)) {}

Nfa::Nfa(Alphabet alphabet) : Nfa(std::move(alphabet), 1) {}

Nfa::Nfa(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      out_(std::max<std::size_t>(num_states, 1)),
      accepting_(std::max<std::size_t>(num_states, 1), 0) {}

std::size_t Nfa::num_transitions() const noexcept {
  std::size_t n = 0;
  for (const auto& edges : out_) n += edges.size();
  return n;
}

State Nfa::add_state(bool accepting) {
  out_.emplace_back();
  accepting_.push_back(accepting ? 1 : 0);
  return static_cast<State>(out_.size() - 1);
}

void Nfa::set_initial(State state) {
  check_state(state);
  initial_ = state;
}

void Nfa::set_accepting(State state, bool accepting) {
  check_state(state);
  accepting_[state] = accepting ? 1 : 0;
}

bool Nfa::has_accepting_state() const noexcept {
  return std::any_of(accepting_.begin(), accepting_.end(), [](char c) { return c != 0; });
}

void Nfa::add_transition(State source, Label label, State target) {
  check_state(source);
  check_state(target);
  if (label != kEpsilon && (label < 0 || static_cast<std::size_t>(label) >= alphabet_.size())) {
    throw ContractViolation("transition label " + std::to_string(label) +
                            " outside alphabet " + to_string(alphabet_));
  }
  out_[source].push_back(Edge{label, target});
}

void Nfa::add_transition(State source, std::string_view symbol, State target) {
  if (symbol == kEpsilonToken) {
    add_transition(source, kEpsilon, target);
    return;
  }
  auto index = alphabet_.index_of(symbol);
  if (!index) {
    throw ContractViolation("action '" + std::string(symbol) + "' not in alphabet " +
                            to_string(alphabet_));
  }
  add_transition(source, static_cast<Label>(*index), target);
}

std::vector<Transition> Nfa::transitions() const {
  std::vector<Transition> result;
  for (State s = 0; s < out_.size(); ++s) {
    for (const Edge& e : out_[s]) result.push_back(Transition{s, e.label, e.target});
  }
  return result;
}

void Nfa::sort_edges() {
  for (auto& edges : out_) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
}

void Nfa::check_state(State state) const {
  if (state >= out_.size()) {
    throw ContractViolation("state " + std::to_string(state) + " out of range (automaton has " +
                            std::to_string(out_.size()) + " states)");
  }
}

NfaRunner::NfaRunner(const Nfa& nfa) : nfa_(&nfa) {}

StateSet NfaRunner::start() const { return close(StateSet{nfa_->initial()}); }

StateSet NfaRunner::step(const StateSet& from, Label label) const {
  StateSet next;
  for (State s : from) {
    for (const Edge& e : nfa_->edges(s)) {
      if (e.label == label) next.push_back(e.target);
    }
  }
  return close(std::move(next));
}

bool NfaRunner::accepting(const StateSet& states) const {
  return std::any_of(states.begin(), states.end(),
                     [&](State s) { return nfa_->is_accepting(s); });
}

StateSet NfaRunner::close(StateSet states) const {
  std::vector<char> seen(nfa_->num_states(), 0);
  StateSet stack;
  for (State s : states) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  StateSet closed;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    closed.push_back(s);
    for (const Edge& e : nfa_->edges(s)) {
      if (e.label == kEpsilon && !seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  std::sort(closed.begin(), closed.end());
  return closed;
}

}  // namespace pushin
