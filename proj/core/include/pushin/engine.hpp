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

// The push-in procedure: decide whether a system of black-boxes exhibits a
// behavior from a finite bad set by testing one black-box at a time.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/nfa.hpp"
#include "pushin/oracle.hpp"
#include "pushin/system.hpp"
#include "pushin/word_count.hpp"

namespace pushin {

enum class Answer { yes, no };

enum class CauseKind {
  survivors_empty,       // SUV_i = ∅ at step i
  aux_accepts_empty,     // λ ∈ L(A_i) at step i
  last_step_nonempty,    // SUV_k ≠ ∅
  no_global_candidates,  // L(M_global) = ∅ before step 1
  exhaustive_search,     // verdict of the brute-force checker
};

struct Termination {
  CauseKind kind = CauseKind::no_global_candidates;
  std::size_t step = 0;  // 1-based; 0 for no_global_candidates
};

std::string to_string(Answer answer);
std::string to_string(CauseKind kind);

struct StepReport {
  std::size_t i = 0;
  std::string blackbox;
  WordCount count_a;
  WordCount count_u;
  WordCount count_suv;
  std::uint64_t tests_run = 0;
};

struct Verdict {
  Answer answer = Answer::yes;
  std::optional<Word> witness;
  Termination cause;
  std::vector<StepReport> reports;
};

/// Everything computed at step i, kept for witness reconstruction.
struct StepState {
  std::size_t index = 0;     // 1-based position in the testing order
  std::size_t blackbox = 0;  // index into SystemDescription::blackboxes
  Alphabet sigma;            // Σ_i
  Alphabet rest;             // Σ_i ∪ … ∪ Σ_k
  Nfa aux{Alphabet{}};       // A_i over `rest`
  Nfa unit{Alphabet{}};      // U_i over Σ_i
  Nfa survivors{Alphabet{}};  // SUV_i over Σ_i
  std::uint64_t tests_run = 0;
  std::vector<Nfa> theta_layers;  // Θ_0 … Θ_m
  bool shortcut = false;          // λ ∈ L(A_i); U_i and SUV_i were not built
};

struct PushinTrace {
  Nfa m_global{Alphabet{}};
  std::vector<StepState> steps;
};

struct EngineOptions {
  /// Worker threads for the queries of one job. 1 = sequential.
  std::size_t jobs = 1;
};

struct SurvivingSet {
  Nfa survivors{Alphabet{}};
  std::uint64_t tests_run = 0;
  std::vector<Nfa> layers;  // Θ_0 … Θ_m, with Θ_0 = {λ}
};

/// Ascending interface size, ties kept in declaration order.
std::vector<std::size_t> default_order(const SystemDescription& sys);
/// `auto` or a comma-separated permutation of black-box names.
std::vector<std::size_t> resolve_order(const SystemDescription& sys, std::string_view spec);

/// A_1: M_global projected onto the union of the black-box alphabets.
Nfa initial_auxiliary(const Nfa& m_global, std::span<const Alphabet> blackbox_alphabets);

/// U_i: A_i projected onto Σ_i.
Nfa unit_tsa(const Nfa& aux, const Alphabet& sigma_i);

/// A_i from A_{i-1} and SUV_{i-1}: keep the words whose Σ_{i-1} part
/// survived, then project onto Σ_i ∪ … ∪ Σ_k.
Nfa next_auxiliary(const Nfa& prev_aux, const Nfa& survivors, const Alphabet& sigma_rest);

bool check_empty_word_shortcut(const Nfa& aux);

/// Layered testing of the finite language of `unit_a`: job j tests only the
/// length-j prefixes that extend a successful length-(j-1) prefix, in
/// shortlex order, and stops as soon as a layer has no successes. Queries
/// of one job may run on `options.jobs` threads; results are merged in
/// shortlex order. An exception from the oracle is rethrown as OracleError
/// carrying the word.
SurvivingSet surviving_set(const BlackBoxOracle& oracle, const Nfa& unit_a,
                           const EngineOptions& options = {});

/// Runs all steps over `order` (indices into sys.blackboxes). Fills `trace`
/// when given.
Verdict run_pushin(const SystemDescription& sys, const Nfa& m_bad, std::span<const std::size_t> order,
                   const EngineOptions& options = {}, PushinTrace* trace = nullptr);

/// Lifts a step-j sequence to a shortest, shortlex-least step-(j-1)
/// sequence. `j` is 1-based and must be ≥ 2.
Word select_step(std::size_t j, const Word& alpha_j, const PushinTrace& trace);

/// Lifts a step-j sequence to a full global bad behavior.
Word bad_gen(std::size_t j, const Word& alpha_j, const PushinTrace& trace);

}  // namespace pushin
