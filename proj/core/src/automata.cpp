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

#include "pushin/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "pushin/error.hpp"

namespace pushin {
namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b, const char* op) {
  if (a.alphabet() != b.alphabet()) {
    throw ContractViolation(std::string(op) + ": alphabet mismatch " + to_string(a.alphabet()) +
                            " vs " + to_string(b.alphabet()));
  }
}

// Breadth-first product over reachable state pairs. `expand` receives the
// pair and an `emit(label, p', q')` callback.
template <typename Expand>
Nfa build_product(const Alphabet& alphabet, State a_init, State b_init, std::size_t b_states,
                  Expand expand, const Nfa& a, const Nfa& b) {
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  Nfa out(alphabet);
  auto key = [b_states](State p, State q) {
    return static_cast<std::uint64_t>(p) * b_states + q;
  };
  ids.emplace(key(a_init, b_init), 0);
  pairs.emplace_back(a_init, b_init);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    out.set_accepting(static_cast<State>(i), a.is_accepting(p) && b.is_accepting(q));
    expand(p, q, [&](Label label, State np, State nq) {
      auto [it, inserted] = ids.emplace(key(np, nq), static_cast<State>(pairs.size()));
      if (inserted) {
        pairs.emplace_back(np, nq);
        out.add_state();
      }
      out.add_transition(static_cast<State>(i), label, it->second);
    });
  }
  return out;
}

// Topological order of an epsilon-free automaton, or empty when it has a
// cycle. Assumes every state is reachable from the initial state.
std::optional<std::vector<State>> topological_order(const Nfa& dfa) {
  const std::size_t n = dfa.num_states();
  std::vector<std::size_t> indegree(n, 0);
  for (State s = 0; s < n; ++s) {
    for (const Edge& e : dfa.edges(s)) ++indegree[e.target];
  }
  std::vector<State> order;
  order.reserve(n);
  for (State s = 0; s < n; ++s) {
    if (indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Edge& e : dfa.edges(order[i])) {
      if (--indegree[e.target] == 0) order.push_back(e.target);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<State> finite_order(const Nfa& canonical, const char* op) {
  auto order = topological_order(canonical);
  if (!order) throw InfiniteLanguage(std::string(op) + ": language is infinite");
  return *order;
}

// Longest path to an accepting state from each state of a trim acyclic DFA.
std::vector<std::size_t> longest_to_accept(const Nfa& dfa, const std::vector<State>& order) {
  std::vector<std::size_t> longest(dfa.num_states(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t best = 0;
    for (const Edge& e : dfa.edges(*it)) best = std::max(best, longest[e.target] + 1);
    longest[*it] = best;
  }
  return longest;
}

Word to_word(const std::vector<Label>& labels, const Alphabet& alphabet) {
  Word w;
  w.reserve(labels.size());
  for (Label l : labels) w.push_back(alphabet[static_cast<std::size_t>(l)]);
  return w;
}

}  // namespace

Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "intersect");
  return build_product(
      a.alphabet(), a.initial(), b.initial(), b.num_states(),
      [&](State p, State q, auto emit) {
        for (const Edge& e : a.edges(p)) {
          if (e.label == kEpsilon) emit(kEpsilon, e.target, q);
        }
        for (const Edge& f : b.edges(q)) {
          if (f.label == kEpsilon) emit(kEpsilon, p, f.target);
        }
        for (const Edge& e : a.edges(p)) {
          if (e.label == kEpsilon) continue;
          for (const Edge& f : b.edges(q)) {
            if (f.label == e.label) emit(e.label, e.target, f.target);
          }
        }
      },
      a, b);
}

Nfa lift_intersect(const Nfa& a, const Nfa& b) {
  if (!b.alphabet().is_subset_of(a.alphabet())) {
    throw ContractViolation("lift_intersect: " + to_string(b.alphabet()) + " is not a subset of " +
                            to_string(a.alphabet()));
  }
  std::vector<Label> to_b(a.alphabet().size(), kEpsilon);
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    if (auto j = b.alphabet().index_of(a.alphabet()[i])) to_b[i] = static_cast<Label>(*j);
  }
  return build_product(
      a.alphabet(), a.initial(), b.initial(), b.num_states(),
      [&](State p, State q, auto emit) {
        for (const Edge& f : b.edges(q)) {
          if (f.label == kEpsilon) emit(kEpsilon, p, f.target);
        }
        for (const Edge& e : a.edges(p)) {
          if (e.label == kEpsilon) {
            emit(kEpsilon, e.target, q);
            continue;
          }
          Label mapped = to_b[static_cast<std::size_t>(e.label)];
          if (mapped == kEpsilon) {
            emit(e.label, e.target, q);
            continue;
          }
          for (const Edge& f : b.edges(q)) {
            if (f.label == mapped) emit(e.label, e.target, f.target);
          }
        }
      },
      a, b);
}

Nfa unite(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "unite");
  const State offset_a = 1;
  const State offset_b = static_cast<State>(1 + a.num_states());
  Nfa out(a.alphabet(), 1 + a.num_states() + b.num_states());
  out.add_transition(0, kEpsilon, offset_a + a.initial());
  out.add_transition(0, kEpsilon, offset_b + b.initial());
  for (State s = 0; s < a.num_states(); ++s) {
    out.set_accepting(offset_a + s, a.is_accepting(s));
    for (const Edge& e : a.edges(s)) out.add_transition(offset_a + s, e.label, offset_a + e.target);
  }
  for (State s = 0; s < b.num_states(); ++s) {
    out.set_accepting(offset_b + s, b.is_accepting(s));
    for (const Edge& e : b.edges(s)) out.add_transition(offset_b + s, e.label, offset_b + e.target);
  }
  return out;
}

Nfa project(const Nfa& a, const Alphabet& keep) {
  if (!keep.is_subset_of(a.alphabet())) {
    throw ContractViolation("project: " + to_string(keep) + " is not a subset of " +
                            to_string(a.alphabet()));
  }
  std::vector<Label> relabel(a.alphabet().size(), kEpsilon);
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    if (auto j = keep.index_of(a.alphabet()[i])) relabel[i] = static_cast<Label>(*j);
  }
  Nfa out(keep, a.num_states());
  out.set_initial(a.initial());
  for (State s = 0; s < a.num_states(); ++s) {
    out.set_accepting(s, a.is_accepting(s));
    for (const Edge& e : a.edges(s)) {
      Label l = e.label == kEpsilon ? kEpsilon : relabel[static_cast<std::size_t>(e.label)];
      out.add_transition(s, l, e.target);
    }
  }
  return out;
}

bool accepts(const Nfa& a, const Word& word) {
  NfaRunner runner(a);
  StateSet current = runner.start();
  for (const Symbol& symbol : word) {
    auto index = a.alphabet().index_of(symbol);
    if (!index) {
      throw ContractViolation("accepts: action '" + symbol + "' not in alphabet " +
                              to_string(a.alphabet()));
    }
    current = runner.step(current, static_cast<Label>(*index));
    if (current.empty()) return false;
  }
  return runner.accepting(current);
}

bool accepts_empty_word(const Nfa& a) {
  NfaRunner runner(a);
  return runner.accepting(runner.start());
}

bool is_empty_language(const Nfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (a.is_accepting(s)) return false;
    for (const Edge& e : a.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return true;
}

bool is_finite_language(const Nfa& a) { return topological_order(normalize(a)).has_value(); }

bool language_equal(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "language_equal");
  return normalize(a) == normalize(b);
}

bool language_subset(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b, "language_subset");
  return normalize(intersect(a, b)) == normalize(a);
}

WordCount count_words(const Nfa& a) {
  Nfa dfa = normalize(a);
  std::vector<State> order = finite_order(dfa, "count_words");
  std::vector<WordCount> count(dfa.num_states());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    WordCount c = dfa.is_accepting(*it) ? 1 : 0;
    for (const Edge& e : dfa.edges(*it)) c += count[e.target];
    count[*it] = std::move(c);
  }
  return count[dfa.initial()];
}

std::size_t max_word_length(const Nfa& a) {
  Nfa dfa = normalize(a);
  if (!dfa.has_accepting_state()) throw EmptyLanguage("max_word_length: language is empty");
  std::vector<State> order = finite_order(dfa, "max_word_length");
  return longest_to_accept(dfa, order)[dfa.initial()];
}

Nfa prefixes_of_length(const Nfa& a, std::size_t length) {
  Nfa dfa = normalize(a);
  finite_order(dfa, "prefixes_of_length");
  if (!dfa.has_accepting_state()) return dfa;
  // Trim: every state is live, so every path spells a prefix.
  for (State s = 0; s < dfa.num_states(); ++s) dfa.set_accepting(s);
  return normalize(intersect(dfa, length_window(dfa.alphabet(), length, length)));
}

Nfa from_word_set(std::span<const Word> words, const Alphabet& alphabet) {
  Nfa trie(alphabet);
  std::vector<std::unordered_map<Label, State>> children(1);
  for (const Word& word : words) {
    State s = 0;
    for (const Symbol& symbol : word) {
      auto index = alphabet.index_of(symbol);
      if (!index) {
        throw ContractViolation("from_word_set: action '" + symbol + "' not in alphabet " +
                                to_string(alphabet));
      }
      Label l = static_cast<Label>(*index);
      auto it = children[s].find(l);
      if (it == children[s].end()) {
        State t = trie.add_state();
        children.emplace_back();
        trie.add_transition(s, l, t);
        children[s].emplace(l, t);
        s = t;
      } else {
        s = it->second;
      }
    }
    trie.set_accepting(s);
  }
  return normalize(trie);
}

Nfa word_automaton(const Word& word, const Alphabet& alphabet) {
  Nfa out(alphabet, word.size() + 1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.add_transition(static_cast<State>(i), word[i], static_cast<State>(i + 1));
  }
  out.set_accepting(static_cast<State>(word.size()));
  return out;
}

Nfa length_window(const Alphabet& alphabet, std::size_t min_length, std::size_t max_length) {
  Nfa out(alphabet, max_length + 1);
  for (std::size_t i = 0; i <= max_length; ++i) {
    if (i >= min_length) out.set_accepting(static_cast<State>(i));
    if (i == max_length) break;
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      out.add_transition(static_cast<State>(i), static_cast<Label>(c), static_cast<State>(i + 1));
    }
  }
  return out;
}

Nfa empty_word_automaton(const Alphabet& alphabet) {
  Nfa out(alphabet);
  out.set_accepting(0);
  return out;
}

Nfa append_any_symbol(const Nfa& a) {
  Nfa out = a;
  State final = out.add_state(true);
  for (State s = 0; s < a.num_states(); ++s) {
    if (!a.is_accepting(s)) continue;
    out.set_accepting(s, false);
    for (std::size_t c = 0; c < a.alphabet().size(); ++c) {
      out.add_transition(s, static_cast<Label>(c), final);
    }
  }
  return out;
}

void for_each_word(const Nfa& a, const std::function<bool(const Word&)>& visit) {
  Nfa dfa = normalize(a);
  std::vector<State> order = finite_order(dfa, "enumerate");
  if (!dfa.has_accepting_state()) return;
  const std::size_t max_len = longest_to_accept(dfa, order)[dfa.initial()];

  // can_finish[r][s]: some word of length exactly r leads from s to acceptance.
  std::vector<std::vector<char>> can_finish(max_len + 1, std::vector<char>(dfa.num_states(), 0));
  for (State s = 0; s < dfa.num_states(); ++s) can_finish[0][s] = dfa.is_accepting(s) ? 1 : 0;
  for (std::size_t r = 1; r <= max_len; ++r) {
    for (State s = 0; s < dfa.num_states(); ++s) {
      for (const Edge& e : dfa.edges(s)) {
        if (can_finish[r - 1][e.target]) {
          can_finish[r][s] = 1;
          break;
        }
      }
    }
  }

  std::vector<Label> path;
  bool keep_going = true;
  // Edges of a canonical automaton are sorted by label, so depth-first
  // traversal yields lexicographic order within one length.
  std::function<void(State, std::size_t)> descend = [&](State s, std::size_t remaining) {
    if (remaining == 0) {
      keep_going = visit(to_word(path, dfa.alphabet()));
      return;
    }
    for (const Edge& e : dfa.edges(s)) {
      if (!can_finish[remaining - 1][e.target]) continue;
      path.push_back(e.label);
      descend(e.target, remaining - 1);
      path.pop_back();
      if (!keep_going) return;
    }
  };
  for (std::size_t len = 0; len <= max_len && keep_going; ++len) {
    if (can_finish[len][dfa.initial()]) descend(dfa.initial(), len);
  }
}

std::vector<Word> enumerate(const Nfa& a) {
  std::vector<Word> words;
  for_each_word(a, [&](const Word& w) {
    words.push_back(w);
    return true;
  });
  return words;
}

std::optional<Word> first_word(const Nfa& a) {
  Nfa dfa = normalize(a);
  if (!dfa.has_accepting_state()) return std::nullopt;
  const std::size_t n = dfa.num_states();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s) {
    for (const Edge& e : dfa.edges(s)) reverse[e.target].push_back(s);
  }
  std::vector<std::size_t> dist(n, kInf);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s) {
    if (dfa.is_accepting(s)) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : reverse[s]) {
      if (dist[p] == kInf) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<Label> path;
  State s = dfa.initial();
  while (dist[s] > 0) {
    for (const Edge& e : dfa.edges(s)) {
      if (dist[e.target] + 1 == dist[s]) {
        path.push_back(e.label);
        s = e.target;
        break;
      }
    }
  }
  return to_word(path, dfa.alphabet());
}

}  // namespace pushin
