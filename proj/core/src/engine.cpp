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

#include "pushin/engine.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "pushin/automata.hpp"
#include "pushin/error.hpp"

namespace pushin {

std::string to_string(Answer answer) { return answer == Answer::yes ? "yes" : "no"; }

std::string to_string(CauseKind kind) {
  switch (kind) {
    case CauseKind::survivors_empty: return "SurvivorsEmpty";
    case CauseKind::aux_accepts_empty: return "AuxAcceptsEmpty";
    case CauseKind::last_step_nonempty: return "LastStepNonEmpty";
    case CauseKind::no_global_candidates: return "NoGlobalCandidates";
    case CauseKind::exhaustive_search: return "ExhaustiveSearch";
  }
  return "?";
}

std::vector<std::size_t> default_order(const SystemDescription& sys) {
  std::vector<std::size_t> order(sys.blackboxes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sys.blackboxes[a].interface.actions().size() < sys.blackboxes[b].interface.actions().size();
  });
  return order;
}

std::vector<std::size_t> resolve_order(const SystemDescription& sys, std::string_view spec) {
  if (spec.empty() || spec == "auto") return default_order(sys);
  std::vector<std::size_t> order;
  std::set<std::size_t> seen;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view name = spec.substr(pos, comma - pos);
    std::size_t index = sys.blackbox_index(name);
    if (!seen.insert(index).second) {
      throw ContractViolation("black-box '" + std::string(name) + "' appears twice in the order");
    }
    order.push_back(index);
    pos = comma + 1;
  }
  if (order.size() != sys.blackboxes.size()) {
    throw ContractViolation("the order must name every black-box exactly once");
  }
  return order;
}

Nfa initial_auxiliary(const Nfa& m_global, std::span<const Alphabet> blackbox_alphabets) {
  Alphabet keep;
  for (const auto& a : blackbox_alphabets) keep = keep.unite(a);
  return normalize(project(m_global, keep));
}

Nfa unit_tsa(const Nfa& aux, const Alphabet& sigma_i) { return normalize(project(aux, sigma_i)); }

Nfa next_auxiliary(const Nfa& prev_aux, const Nfa& survivors, const Alphabet& sigma_rest) {
  return normalize(project(lift_intersect(prev_aux, survivors), sigma_rest));
}

bool check_empty_word_shortcut(const Nfa& aux) { return accepts_empty_word(aux); }

namespace {

bool guarded_query(const BlackBoxOracle& oracle, const Word& word) {
  try {
    return oracle.query(word);
  } catch (const OracleError&) {
    throw;
  } catch (const std::exception& e) {
    throw OracleError(word, e.what());
  } catch (...) {
    throw OracleError(word, "unknown exception");
  }
}

// Answers for `words`, indexed like `words`. With several workers each one
// takes a strided slice; the first failure in word order is rethrown.
std::vector<char> run_queries(const BlackBoxOracle& oracle, const std::vector<Word>& words,
                              std::size_t jobs) {
  std::vector<char> answers(words.size(), 0);
  const std::size_t workers = std::min(std::max<std::size_t>(jobs, 1), words.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) answers[i] = guarded_query(oracle, words[i]);
    return answers;
  }
  std::vector<std::exception_ptr> errors(words.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < words.size(); i += workers) {
        try {
          answers[i] = guarded_query(oracle, words[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return answers;
}

}  // namespace

SurvivingSet surviving_set(const BlackBoxOracle& oracle, const Nfa& unit_a, const EngineOptions& options) {
  const Alphabet& sigma = unit_a.alphabet();
  SurvivingSet out;
  Nfa theta = empty_word_automaton(sigma);
  out.layers.push_back(normalize(theta));
  std::vector<Word> successes{Word{}};

  if (is_empty_language(unit_a)) {
    out.survivors = normalize(Nfa(sigma));
    return out;
  }
  const std::size_t m = max_word_length(unit_a);
  for (std::size_t j = 1; j <= m; ++j) {
    Nfa p_hat = normalize(intersect(prefixes_of_length(unit_a, j), append_any_symbol(theta)));
    std::vector<Word> candidates = enumerate(p_hat);
    out.tests_run += candidates.size();
    std::vector<char> answers = run_queries(oracle, candidates, options.jobs);
    std::vector<Word> layer;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (answers[i]) layer.push_back(std::move(candidates[i]));
    }
    theta = from_word_set(layer, sigma);
    out.layers.push_back(theta);
    if (layer.empty()) break;
    successes.insert(successes.end(), layer.begin(), layer.end());
  }
  out.survivors = normalize(intersect(unit_a, from_word_set(successes, sigma)));
  return out;
}

Verdict run_pushin(const SystemDescription& sys, const Nfa& m_bad, std::span<const std::size_t> order,
                   const EngineOptions& options, PushinTrace* trace) {
  sys.validate();
  const std::size_t k = sys.blackboxes.size();
  {
    std::vector<std::size_t> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == k;
    for (std::size_t i = 0; permutation && i < k; ++i) permutation = sorted[i] == i;
    if (!permutation) throw ContractViolation("order is not a permutation of the black-boxes");
  }

  PushinTrace local;
  PushinTrace& tr = trace ? *trace : local;
  tr.steps.clear();
  tr.m_global = build_m_global(sys, m_bad);

  Verdict verdict;
  if (is_empty_language(tr.m_global)) {
    verdict.answer = Answer::yes;
    verdict.cause = {CauseKind::no_global_candidates, 0};
    return verdict;
  }

  std::vector<Alphabet> sigmas;
  for (std::size_t idx : order) sigmas.push_back(sys.blackboxes[idx].interface.actions());
  std::vector<Alphabet> rests(k + 1);
  for (std::size_t i = k; i-- > 0;) rests[i] = sigmas[i].unite(rests[i + 1]);

  Nfa aux = initial_auxiliary(tr.m_global, sigmas);
  for (std::size_t i = 0; i < k; ++i) {
    StepState step;
    step.index = i + 1;
    step.blackbox = order[i];
    step.sigma = sigmas[i];
    step.rest = rests[i];
    step.aux = std::move(aux);

    StepReport report;
    report.i = step.index;
    report.blackbox = sys.blackboxes[step.blackbox].name;
    report.count_a = count_words(step.aux);

    if (check_empty_word_shortcut(step.aux)) {
      step.shortcut = true;
      step.unit = Nfa(step.sigma);
      step.survivors = Nfa(step.sigma);
      tr.steps.push_back(std::move(step));
      verdict.reports.push_back(std::move(report));
      verdict.answer = Answer::no;
      verdict.cause = {CauseKind::aux_accepts_empty, i + 1};
      verdict.witness = bad_gen(i + 1, Word{}, tr);
      return verdict;
    }

    step.unit = unit_tsa(step.aux, step.sigma);
    SurvivingSet suv = surviving_set(*sys.blackboxes[step.blackbox].oracle, step.unit, options);
    step.survivors = std::move(suv.survivors);
    step.tests_run = suv.tests_run;
    step.theta_layers = std::move(suv.layers);

    report.count_u = count_words(step.unit);
    report.count_suv = count_words(step.survivors);
    report.tests_run = step.tests_run;
    verdict.reports.push_back(std::move(report));

    const bool empty = is_empty_language(step.survivors);
    tr.steps.push_back(std::move(step));
    const StepState& done = tr.steps.back();
    if (empty) {
      verdict.answer = Answer::yes;
      verdict.cause = {CauseKind::survivors_empty, i + 1};
      return verdict;
    }
    if (i + 1 == k) {
      verdict.answer = Answer::no;
      verdict.cause = {CauseKind::last_step_nonempty, k};
      verdict.witness = bad_gen(k, *first_word(done.survivors), tr);
      return verdict;
    }
    aux = next_auxiliary(done.aux, done.survivors, rests[i + 1]);
  }
  throw ContractViolation("run_pushin: unreachable");
}

Word select_step(std::size_t j, const Word& alpha_j, const PushinTrace& trace) {
  if (j < 2 || j > trace.steps.size()) throw ContractViolation("select_step: step index out of range");
  const StepState& prev = trace.steps[j - 2];
  const StepState& cur = trace.steps[j - 1];
  Nfa candidates = lift_intersect(lift_intersect(prev.aux, prev.survivors),
                                  word_automaton(alpha_j, cur.rest));
  auto word = first_word(normalize(candidates));
  if (!word) {
    throw ContractViolation("select_step: no step-" + std::to_string(j - 1) + " sequence lifts '" +
                            to_string(alpha_j) + "'");
  }
  return *word;
}

Word bad_gen(std::size_t j, const Word& alpha_j, const PushinTrace& trace) {
  if (j < 1 || j > trace.steps.size()) throw ContractViolation("bad_gen: step index out of range");
  Word alpha = alpha_j;
  for (std::size_t step = j; step >= 2; --step) alpha = select_step(step, alpha, trace);
  const Alphabet& rest = trace.steps.front().rest;
  auto word = first_word(normalize(lift_intersect(trace.m_global, word_automaton(alpha, rest))));
  if (!word) {
    throw ContractViolation("bad_gen: '" + to_string(alpha) + "' has no global preimage");
  }
  return *word;
}

}  // namespace pushin
