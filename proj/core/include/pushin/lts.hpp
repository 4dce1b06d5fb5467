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
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/nfa.hpp"

namespace pushin {

/// A finite labeled transition system with an internal action, input
/// actions and output actions. Labels index into `interface()`, which is the
/// union of inputs and outputs.
///
/// Input/output kinds are carried as metadata; composition and testing only
/// look at the interface.
class Unit {
 public:
  Unit(std::string name, Alphabet inputs, Alphabet outputs);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& inputs() const noexcept { return inputs_; }
  const Alphabet& outputs() const noexcept { return outputs_; }
  const Alphabet& interface() const noexcept { return interface_; }

  std::size_t num_states() const noexcept { return state_names_.size(); }
  const std::string& state_name(State s) const { return state_names_.at(s); }
  State state(std::string_view name) const;
  bool has_state(std::string_view name) const;

  /// The first state added becomes the initial state.
  State add_state(std::string name);
  void set_initial(State s);
  State initial() const;

  void add_transition(State source, Label label, State target);
  /// `action` is an interface name or `eps`.
  void add_transition(std::string_view source, std::string_view action, std::string_view target);

  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  bool operator==(const Unit&) const = default;

 private:
  std::string name_;
  Alphabet inputs_;
  Alphabet outputs_;
  Alphabet interface_;
  std::vector<std::string> state_names_;
  std::map<std::string, State, std::less<>> state_index_;
  State initial_ = 0;
  std::vector<Transition> transitions_;
};

/// Observable-behavior automaton: every state accepting, internal moves as
/// epsilon moves, alphabet = interface.
Nfa lts_to_nfa(const Unit& unit);

/// True when `behavior` is an observable behavior of `unit`.
bool bbtest(const Unit& unit, const Word& behavior);

/// Synchronous product: a move on action a synchronizes every unit whose
/// interface contains a, all others stay; an internal move is taken by
/// exactly one unit. Only the reachable part is built. Unit names must be
/// distinct.
Unit compose(std::span<const Unit> units);

/// Every observable behavior of length at most `max_length`.
std::set<Word> observable_behaviors_upto(const Unit& unit, std::size_t max_length);

/// Unit file format:
///   unit <Name>
///   inputs <names...>
///   outputs <names...>
///   states <names...>
///   initial <name>
///   trans <src> <action|eps> <dst>
Unit parse_unit(std::string_view text, const std::string& source = "<unit>");
std::string to_text(const Unit& unit);

}  // namespace pushin
