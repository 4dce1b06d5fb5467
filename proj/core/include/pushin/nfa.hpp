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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pushin/alphabet.hpp"

namespace pushin {

using State = std::uint32_t;

/// Index of a symbol in the owning automaton's alphabet, or kEpsilon.
using Label = std::int32_t;
inline constexpr Label kEpsilon = -1;

struct Edge {
  Label label;
  State target;

  auto operator<=>(const Edge&) const = default;
};

struct Transition {
  State source;
  Label label;
  State target;

  auto operator<=>(const Transition&) const = default;
};

/// Finite automaton with epsilon moves over a named alphabet, one initial
/// state and a set of accepting states.
///
/// An automaton always has at least one state. The canonical empty-language
/// automaton is a single non-accepting state without transitions.
class Nfa {
 public:
  /// One initial, non-accepting state.
  explicit Nfa(Alphabet alphabet);
  Nfa(Alphabet alphabet, std::size_t num_states);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return out_.size(); }
  std::size_t num_transitions() const noexcept;
  State initial() const noexcept { return initial_; }

  State add_state(bool accepting = false);
  void set_initial(State state);
  void set_accepting(State state, bool accepting = true);
  bool is_accepting(State state) const { return accepting_[state] != 0; }
  bool has_accepting_state() const noexcept;

  void add_transition(State source, Label label, State target);
  /// `symbol` is an alphabet name or the reserved `eps` token.
  void add_transition(State source, std::string_view symbol, State target);

  /// Outgoing edges of `state`, in insertion order (sorted for canonical
  /// automata produced by `normalize`).
  std::span<const Edge> edges(State state) const { return out_[state]; }
  std::vector<Transition> transitions() const;

  /// Sorts and deduplicates each state's edge list.
  void sort_edges();

  /// Structural equality: same alphabet, numbering, edges and accepting set.
  bool operator==(const Nfa&) const = default;

 private:
  void check_state(State state) const;

  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<std::vector<Edge>> out_;
  std::vector<char> accepting_;
};

/// Sorted set of automaton states.
using StateSet = std::vector<State>;

/// Subset simulation of an automaton: word-by-word tracking of the
/// epsilon-closed set of reachable states.
class NfaRunner {
 public:
  explicit NfaRunner(const Nfa& nfa);

  StateSet start() const;
  /// States reachable from `from` by one `label` move followed by epsilon
  /// moves. `label` must not be kEpsilon.
  StateSet step(const StateSet& from, Label label) const;
  bool accepting(const StateSet& states) const;

  const Nfa& nfa() const noexcept { return *nfa_; }

 private:
  StateSet close(StateSet states) const;

  const Nfa* nfa_;
};

/// Text form, one declaration per line:
///   alphabet a b c
///   states 4
///   initial 0
///   accepting 1 3
///   trans 0 a 1
///   trans 1 eps 2
std::string to_text(const Nfa& nfa);
Nfa parse_nfa(std::string_view text, const std::string& source = "<nfa>");

}  // namespace pushin
