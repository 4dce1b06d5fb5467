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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/lts.hpp"
#include "pushin/nfa.hpp"
#include "pushin/oracle.hpp"

namespace pushin {

/// A component known only through its interface and a testing oracle.
/// `implementation` is set for simulated black-boxes; the algorithm never
/// reads it, only the brute-force checker does.
struct BlackBox {
  std::string name;
  Interface interface;
  std::shared_ptr<const BlackBoxOracle> oracle;
  std::optional<Unit> implementation;
};

/// Wraps a unit as a black-box with a simulating oracle.
BlackBox simulated_blackbox(Unit implementation);

/// A gluer hosting k ≥ 1 black-boxes. Unit index 0 is the gluer, index i ≥ 1
/// is blackboxes[i-1].
struct SystemDescription {
  Unit gluer;
  std::vector<BlackBox> blackboxes;

  /// Union of the gluer interface and all black-box interfaces.
  Alphabet alphabet() const;
  Alphabet interface_of(std::size_t unit_index) const;
  std::size_t blackbox_index(std::string_view name) const;
  bool has_implementations() const;
  /// Gluer followed by every implementation. Throws ContractViolation naming
  /// the first black-box without one.
  std::vector<Unit> units() const;

  /// Checks k ≥ 1, distinct names, oracles present, and that implementations
  /// match their declared interfaces.
  void validate() const;
};

struct Signature {
  Symbol action;
  std::vector<std::size_t> members;  // ascending unit indices
};

Signature signature(const SystemDescription& sys, std::string_view action);

/// Behaviors of the system with every black-box replaced by a free-running
/// unit over its interface: one accepting state per gluer state, gluer moves
/// as they are, self-loops on every action the gluer does not take part in.
Nfa pessimistic_automaton(const SystemDescription& sys);

/// Canonical automaton of L(pessimistic_automaton(sys)) ∩ L(m_bad).
Nfa build_m_global(const SystemDescription& sys, const Nfa& m_bad);

/// System file format:
///   gluer <path>
///   blackbox <Name> inputs <names...> outputs <names...> [impl <path>]
/// Paths are resolved against `base_dir`. A black-box without `impl` gets an
/// oracle that throws OracleError on every query.
SystemDescription parse_system(std::string_view text, const std::filesystem::path& base_dir,
                               const std::string& source = "<system>");
SystemDescription load_system(const std::filesystem::path& path);

/// Renders the system file, referring to units as `<unit name>.unit`.
std::string to_text(const SystemDescription& sys);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pushin
