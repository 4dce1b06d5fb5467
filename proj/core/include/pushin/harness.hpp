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

// Reconstructed data-acquisition system, its four experiment cases, a
// seeded random-system generator, and the exhaustive integration checker
// used as a correctness reference.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pushin/badspec.hpp"
#include "pushin/engine.hpp"
#include "pushin/lts.hpp"
#include "pushin/nfa.hpp"
#include "pushin/system.hpp"

namespace pushin {

// ------------------------------------------------------ data acquisition

enum class CommVariant { baseline, comm_fixed };

std::string to_string(CommVariant variant);
CommVariant parse_comm_variant(std::string_view text);

/// Unit file text of `Gluer`, `Timer`, `Sensor` or `Comm`. The variant only
/// affects Comm.
std::string_view data_acquisition_unit_text(std::string_view unit,
                                            CommVariant variant = CommVariant::baseline);
Unit data_acquisition_unit(std::string_view unit, CommVariant variant = CommVariant::baseline);

/// Gluer hosting Timer, Sensor and Comm, in that order, each simulated.
SystemDescription build_data_acquisition_system(CommVariant variant);

enum class CaseId { case1, case2, case3, case4 };

std::string to_string(CaseId id);
CaseId parse_case(std::string_view text);

/// Regex of the case, e.g. `<ANY>* pause <ANY - resume>* send <ANY>*`.
std::string_view case_regex(CaseId id);

struct ExperimentCase {
  CaseId id = CaseId::case1;
  std::size_t maxlen = 10;
  CommVariant variant = CommVariant::baseline;
};

/// Case 3 runs on the repaired Comm, the others on the baseline.
ExperimentCase standard_case(CaseId id, std::size_t maxlen);

BadSpec case_badspec(CaseId id, std::size_t maxlen);

struct ExperimentResult {
  ExperimentCase experiment;
  Verdict verdict;
  Nfa m_bad{Alphabet{}};
  PushinTrace trace;
};

/// Order Timer, Sensor, Comm.
ExperimentResult run_experiment(const ExperimentCase& experiment, const EngineOptions& options = {});

// ------------------------------------------------------ brute force

/// Shortlex-least word of L(m_bad) that is an observable behavior of the
/// composition of all implementations, found by a length-layered search
/// that only extends system behaviors. Verdict cause is exhaustive_search.
Verdict brute_force_verdict(const SystemDescription& sys, const Nfa& m_bad);

/// True when `word` is an observable behavior of the composed system.
bool is_system_behavior(const SystemDescription& sys, const Word& word);

// ------------------------------------------------------ random systems

struct RandomSystemParams {
  std::uint64_t seed = 1;
  std::size_t k = 2;
  std::size_t max_states_per_unit = 4;
  std::size_t actions_per_unit = 3;
  double sharing_density = 0.5;
  std::size_t bad_max_len = 6;
};

/// Deterministic in `params`. Black-boxes are named B1..Bk, the gluer G.
SystemDescription generate_random_system(const RandomSystemParams& params);

/// A bad spec over the system alphabet: either a short list mixing system
/// behaviors and arbitrary words, or a `<ANY>*`-padded pattern. Deterministic
/// in `params`.
BadSpec generate_random_badspec(const SystemDescription& sys, const RandomSystemParams& params);

}  // namespace pushin
