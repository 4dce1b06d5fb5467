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
#include "pushin/error.hpp"
#include "pushin/harness.hpp"

namespace pushin {
namespace {

struct Node {
  Word word;
  State bad;        // state of the canonical bad DFA
  StateSet system;  // subset of the composed-system automaton
};

std::optional<State> dfa_step(const Nfa& dfa, State s, Label label) {
  for (const Edge& e : dfa.edges(s)) {
    if (e.label == label) return e.target;
  }
  return std::nullopt;
}

Nfa composed_behaviors(const SystemDescription& sys) {
  std::vector<Unit> units = sys.units();
  return lts_to_nfa(compose(units));
}

}  // namespace

bool is_system_behavior(const SystemDescription& sys, const Word& word) {
  Nfa behaviors = composed_behaviors(sys);
  for (const auto& a : word) {
    if (!behaviors.alphabet().contains(a)) return false;
  }
  return accepts(behaviors, word);
}

Verdict brute_force_verdict(const SystemDescription& sys, const Nfa& m_bad) {
  Verdict verdict;
  verdict.cause = {CauseKind::exhaustive_search, 0};
  Nfa behaviors = composed_behaviors(sys);
  if (behaviors.alphabet() != m_bad.alphabet()) {
    throw ContractViolation("brute_force_verdict: bad alphabet " + to_string(m_bad.alphabet()) +
                            " differs from the system alphabet " + to_string(behaviors.alphabet()));
  }
  const Nfa bad = normalize(m_bad);
  if (is_empty_language(bad)) return verdict;
  NfaRunner runner(behaviors);
  const Label sigma = static_cast<Label>(bad.alphabet().size());

  // Layer j holds every length-j system behavior that can still be
  // completed inside the bad language, in lexicographic order. Extending in
  // symbol order keeps the next layer sorted, so the first accepted node of
  // the earliest layer is the shortlex-least witness.
  std::vector<Node> layer{Node{{}, bad.initial(), runner.start()}};
  while (!layer.empty()) {
    for (const Node& n : layer) {
      if (bad.is_accepting(n.bad)) {
        verdict.answer = Answer::no;
        verdict.witness = n.word;
        return verdict;
      }
    }
    std::vector<Node> next;
    for (const Node& n : layer) {
      for (Label a = 0; a < sigma; ++a) {
        auto b = dfa_step(bad, n.bad, a);
        if (!b) continue;
        StateSet s = runner.step(n.system, a);
        if (s.empty()) continue;
        Word w = n.word;
        w.push_back(bad.alphabet()[a]);
        next.push_back(Node{std::move(w), *b, std::move(s)});
      }
    }
    layer = std::move(next);
  }
  return verdict;
}

}  // namespace pushin
