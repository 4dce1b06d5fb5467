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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/nfa.hpp"

namespace pushin {

/// Regular-expression AST over action names.
struct RegexNode {
  /// One action, `<ANY>` (excluded empty), or `<ANY - a b ...>`.
  struct Atom {
    std::optional<std::string> action;  // nullopt for the <ANY ...> forms
    std::vector<std::string> excluded;
  };
  struct Concat {
    std::vector<RegexNode> parts;
  };
  struct Alternation {
    std::vector<RegexNode> options;
  };
  struct Star {
    std::shared_ptr<const RegexNode> body;
  };

  std::variant<Atom, Concat, Alternation, Star> node;
};

/// Canonical rendering in the bad-spec regex syntax.
std::string to_string(const RegexNode& regex);

/// A finite bad-behavior set: either the words of `pattern` whose length
/// lies in [min_length, max_length], or an explicit word list (also
/// filtered by the window when one is given).
struct BadSpec {
  Alphabet alphabet;
  std::optional<RegexNode> pattern;
  std::vector<Word> words;  // used when pattern is empty
  std::size_t min_length = 0;
  std::optional<std::size_t> max_length;

  bool is_list() const noexcept { return !pattern.has_value(); }
};

/// Parses the bad-spec format. Clauses are separated by newlines or `;`:
///   regex: <expr>       | list:  (followed by one word per line, `eps` = λ)
///   minlen: <n>           (optional, default 0)
///   maxlen: <n>           (required with regex:)
/// Grammar: expr := term ('|' term)* ; term := factor+ ; factor := atom '*'? ;
///          atom := NAME | '<ANY>' | '<ANY' '-' NAME+ '>' | '(' expr ')'
BadSpec parse_badspec(std::string_view text, const Alphabet& alphabet,
                      const std::string& source = "<bad>");

std::string to_text(const BadSpec& spec);

/// Canonical automaton of the (finite) bad set.
Nfa compile_badspec(const BadSpec& spec);

/// Thompson automaton of the pattern alone, without the length window.
Nfa regex_automaton(const RegexNode& regex, const Alphabet& alphabet);

}  // namespace pushin
