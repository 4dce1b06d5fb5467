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

#include "pushin/system.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "pushin/automata.hpp"
#include "pushin/error.hpp"
#include "text_util.hpp"

namespace pushin {
namespace {

class UnavailableOracle final : public BlackBoxOracle {
 public:
  explicit UnavailableOracle(std::string name) : name_(std::move(name)) {}
  bool query(const Word& behavior) const override {
    throw OracleError(behavior, "black-box '" + name_ + "' has no attached implementation");
  }

 private:
  std::string name_;
};

}  // namespace

BlackBox simulated_blackbox(Unit implementation) {
  BlackBox box;
  box.name = implementation.name();
  box.interface = Interface{implementation.inputs(), implementation.outputs()};
  box.oracle = std::make_shared<UnitOracle>(implementation);
  box.implementation = std::move(implementation);
  return box;
}

Alphabet SystemDescription::alphabet() const {
  Alphabet all = gluer.interface();
  for (const auto& box : blackboxes) all = all.unite(box.interface.actions());
  return all;
}

Alphabet SystemDescription::interface_of(std::size_t unit_index) const {
  if (unit_index == 0) return gluer.interface();
  if (unit_index > blackboxes.size()) throw ContractViolation("unit index out of range");
  return blackboxes[unit_index - 1].interface.actions();
}

std::size_t SystemDescription::blackbox_index(std::string_view name) const {
  for (std::size_t i = 0; i < blackboxes.size(); ++i) {
    if (blackboxes[i].name == name) return i;
  }
  throw ContractViolation("unknown black-box '" + std::string(name) + "'");
}

bool SystemDescription::has_implementations() const {
  return std::all_of(blackboxes.begin(), blackboxes.end(),
                     [](const BlackBox& b) { return b.implementation.has_value(); });
}

std::vector<Unit> SystemDescription::units() const {
  std::vector<Unit> out{gluer};
  for (const auto& box : blackboxes) {
    if (!box.implementation) {
      throw ContractViolation("black-box '" + box.name + "' has no implementation");
    }
    out.push_back(*box.implementation);
  }
  return out;
}

void SystemDescription::validate() const {
  if (blackboxes.empty()) throw ContractViolation("a system needs at least one black-box");
  std::set<std::string> names{gluer.name()};
  for (const auto& box : blackboxes) {
    if (!names.insert(box.name).second) {
      throw ContractViolation("duplicate unit name '" + box.name + "'");
    }
    if (!box.oracle) throw ContractViolation("black-box '" + box.name + "' has no oracle");
    if (box.interface.inputs.intersects(box.interface.outputs)) {
      throw ContractViolation("black-box '" + box.name + "' declares an action as input and output");
    }
    if (box.implementation && (box.implementation->inputs() != box.interface.inputs ||
                               box.implementation->outputs() != box.interface.outputs)) {
      throw ContractViolation("implementation of '" + box.name +
                              "' does not match the declared interface");
    }
  }
}

Signature signature(const SystemDescription& sys, std::string_view action) {
  Signature sig{Symbol(action), {}};
  if (sys.gluer.interface().contains(action)) sig.members.push_back(0);
  for (std::size_t i = 0; i < sys.blackboxes.size(); ++i) {
    if (sys.blackboxes[i].interface.inputs.contains(action) ||
        sys.blackboxes[i].interface.outputs.contains(action)) {
      sig.members.push_back(i + 1);
    }
  }
  if (sig.members.empty()) {
    throw ContractViolation("action '" + std::string(action) + "' is not in the system alphabet");
  }
  return sig;
}

Nfa pessimistic_automaton(const SystemDescription& sys) {
  const Alphabet sigma = sys.alphabet();
  const Alphabet& sigma0 = sys.gluer.interface();
  const Unit& g = sys.gluer;
  Nfa out(sigma, g.num_states());
  out.set_initial(g.initial());
  for (State s = 0; s < g.num_states(); ++s) out.set_accepting(s);
  for (const Transition& t : g.transitions()) {
    if (t.label == kEpsilon) {
      out.add_transition(t.source, kEpsilon, t.target);
    } else {
      out.add_transition(t.source, sigma0[t.label], t.target);
    }
  }
  const Alphabet free = sigma.minus(sigma0);
  for (State s = 0; s < g.num_states(); ++s) {
    for (const auto& a : free) out.add_transition(s, a, s);
  }
  return out;
}

Nfa build_m_global(const SystemDescription& sys, const Nfa& m_bad) {
  if (m_bad.alphabet() != sys.alphabet()) {
    throw ContractViolation("bad-behavior automaton alphabet " + to_string(m_bad.alphabet()) +
                            " differs from the system alphabet " + to_string(sys.alphabet()));
  }
  return normalize(intersect(pessimistic_automaton(sys), m_bad));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

namespace {

Unit load_unit_at(const detail::Token& tok, std::size_t line, const std::filesystem::path& base_dir,
                  const std::string& source) {
  std::filesystem::path p = base_dir / tok.text;
  std::string text;
  try {
    text = read_text_file(p);
  } catch (const IoError& e) {
    throw ParseError(source, line, tok.column, e.what());
  }
  return parse_unit(text, p.string());
}

std::vector<std::string> names_until_keyword(const std::vector<detail::Token>& tokens, std::size_t& i) {
  std::vector<std::string> out;
  while (i < tokens.size() && tokens[i].text != "inputs" && tokens[i].text != "outputs" &&
         tokens[i].text != "impl") {
    out.push_back(tokens[i++].text);
  }
  return out;
}

Alphabet checked_alphabet(std::vector<std::string> names, const detail::Line& line,
                          std::size_t column, const std::string& source) {
  try {
    return Alphabet(std::move(names));
  } catch (const ContractViolation& e) {
    throw ParseError(source, line.number, column, e.what());
  }
}

}  // namespace

SystemDescription parse_system(std::string_view text, const std::filesystem::path& base_dir,
                               const std::string& source) {
  std::optional<Unit> gluer;
  std::vector<BlackBox> boxes;
  std::size_t gluer_line = 0;

  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& toks = line.tokens;
    const auto& head = toks[0];
    if (head.text == "gluer") {
      if (gluer) throw ParseError(source, line.number, head.column, "duplicate 'gluer' declaration");
      if (toks.size() != 2) throw ParseError(source, line.number, head.column, "expected 'gluer <path>'");
      gluer = load_unit_at(toks[1], line.number, base_dir, source);
      gluer_line = line.number;
    } else if (head.text == "blackbox") {
      if (toks.size() < 2) throw ParseError(source, line.number, head.column, "expected a black-box name");
      BlackBox box;
      box.name = toks[1].text;
      if (!is_valid_symbol_name(box.name)) {
        throw ParseError(source, line.number, toks[1].column, "invalid black-box name '" + box.name + "'");
      }
      bool seen_in = false;
      bool seen_out = false;
      std::size_t i = 2;
      while (i < toks.size()) {
        const auto& kw = toks[i++];
        if (kw.text == "inputs" && !seen_in) {
          seen_in = true;
          box.interface.inputs = checked_alphabet(names_until_keyword(toks, i), line, kw.column, source);
        } else if (kw.text == "outputs" && !seen_out) {
          seen_out = true;
          box.interface.outputs = checked_alphabet(names_until_keyword(toks, i), line, kw.column, source);
        } else if (kw.text == "impl" && !box.implementation) {
          if (i >= toks.size()) throw ParseError(source, line.number, kw.column, "expected 'impl <path>'");
          box.implementation = load_unit_at(toks[i], line.number, base_dir, source);
          ++i;
        } else {
          throw ParseError(source, line.number, kw.column, "unexpected '" + kw.text + "'");
        }
      }
      if (box.interface.inputs.empty() && box.interface.outputs.empty()) {
        throw ParseError(source, line.number, head.column,
                         "black-box '" + box.name + "' declares no actions");
      }
      if (box.implementation) {
        const Unit& u = *box.implementation;
        if (u.inputs() != box.interface.inputs || u.outputs() != box.interface.outputs) {
          throw ParseError(source, line.number, head.column,
                           "implementation of '" + box.name + "' has interface inputs " +
                               to_string(u.inputs()) + " outputs " + to_string(u.outputs()));
        }
        if (u.name() != box.name) {
          throw ParseError(source, line.number, head.column,
                           "implementation unit is named '" + u.name() + "', expected '" + box.name + "'");
        }
        box.oracle = std::make_shared<UnitOracle>(u);
      } else {
        box.oracle = std::make_shared<UnavailableOracle>(box.name);
      }
      boxes.push_back(std::move(box));
    } else {
      throw ParseError(source, line.number, head.column, "expected 'gluer' or 'blackbox'");
    }
  }
  if (!gluer) throw ParseError(source, 1, 1, "missing 'gluer' declaration");
  SystemDescription sys{std::move(*gluer), std::move(boxes)};
  try {
    sys.validate();
  } catch (const ContractViolation& e) {
    throw ParseError(source, gluer_line, 1, e.what());
  }
  return sys;
}

SystemDescription load_system(const std::filesystem::path& path) {
  return parse_system(read_text_file(path), path.parent_path(), path.string());
}

std::string to_text(const SystemDescription& sys) {
  std::ostringstream out;
  out << "gluer " << sys.gluer.name() << ".unit\n";
  for (const auto& box : sys.blackboxes) {
    out << "blackbox " << box.name << " inputs";
    for (const auto& a : box.interface.inputs) out << ' ' << a;
    out << " outputs";
    for (const auto& a : box.interface.outputs) out << ' ' << a;
    if (box.implementation) out << " impl " << box.implementation->name() << ".unit";
    out << '\n';
  }
  return out.str();
}

}  // namespace pushin
