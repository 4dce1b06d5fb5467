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

// Language-level operations on finite automata.
//
// Constructions (intersect, project, lift_intersect, unite, ...) return the
// raw product or relabelled automaton; call `normalize` on the result to get
// the canonical minimal DFA. Queries that need a finite language (counting,
// enumeration, longest word, prefixes) normalize internally.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/nfa.hpp"
#include "pushin/word_count.hpp"

namespace pushin {

/// L(a) ∩ L(b). Requires equal alphabets. Only reachable product states are
/// built, so the state count is at most |a|·|b|.
Nfa intersect(const Nfa& a, const Nfa& b);

/// L(a) ∪ L(b). Requires equal alphabets.
Nfa unite(const Nfa& a, const Nfa& b);

/// {α↓keep : α ∈ L(a)}: every move on a symbol outside `keep` becomes an
/// epsilon move. Requires keep ⊆ a.alphabet.
Nfa project(const Nfa& a, const Alphabet& keep);

/// {α ∈ L(a) : α↓Σb ∈ L(b)}, where Σb = b.alphabet ⊆ a.alphabet. Runs a and
/// b in parallel; b stays put on symbols outside its alphabet.
Nfa lift_intersect(const Nfa& a, const Nfa& b);

/// Canonical form: epsilon-free, deterministic, trim and minimal, with
/// states numbered in breadth-first order from the initial state (edges
/// explored in symbol order). Equal languages over equal alphabets yield
/// structurally equal automata.
Nfa normalize(const Nfa& a);

/// Subset construction only (reachable part, no trimming or minimization).
Nfa determinize(const Nfa& a);

/// Removes states that are unreachable or cannot reach an accepting state.
Nfa trim(const Nfa& a);

bool accepts(const Nfa& a, const Word& word);
bool accepts_empty_word(const Nfa& a);
bool is_empty_language(const Nfa& a);
bool is_finite_language(const Nfa& a);

/// True when L(a) = L(b); requires equal alphabets.
bool language_equal(const Nfa& a, const Nfa& b);
/// True when L(a) ⊆ L(b); requires equal alphabets.
bool language_subset(const Nfa& a, const Nfa& b);

/// Exact |L(a)|. Throws InfiniteLanguage.
WordCount count_words(const Nfa& a);

/// Length of the longest word. Throws EmptyLanguage or InfiniteLanguage.
std::size_t max_word_length(const Nfa& a);

/// {β : |β| = length, ∃γ. βγ ∈ L(a)}. Throws InfiniteLanguage.
Nfa prefixes_of_length(const Nfa& a, std::size_t length);

/// Canonical automaton for a finite set of words (built as a trie).
Nfa from_word_set(std::span<const Word> words, const Alphabet& alphabet);

/// Automaton accepting exactly `word`.
Nfa word_automaton(const Word& word, const Alphabet& alphabet);

/// Words over `alphabet` with min_length ≤ |w| ≤ max_length.
Nfa length_window(const Alphabet& alphabet, std::size_t min_length, std::size_t max_length);

/// Automaton accepting only the empty word.
Nfa empty_word_automaton(const Alphabet& alphabet);

/// L(a)·Σ: every word of L(a) extended by exactly one symbol.
Nfa append_any_symbol(const Nfa& a);

/// Visits the words of a finite language in shortlex order. The visitor
/// returns false to stop early. Throws InfiniteLanguage.
void for_each_word(const Nfa& a, const std::function<bool(const Word&)>& visit);

/// All words of a finite language in shortlex order.
std::vector<Word> enumerate(const Nfa& a);

/// Shortlex-least word, or nullopt for the empty language. Works for
/// infinite languages too.
std::optional<Word> first_word(const Nfa& a);

}  // namespace pushin
