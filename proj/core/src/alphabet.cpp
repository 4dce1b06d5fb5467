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

#include "pushin/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <ostream>
#include <sstream>

#include "pushin/error.hpp"

namespace pushin {

bool is_valid_symbol_name(std::string_view name) noexcept {
  if (name.empty() || name == kEpsilonToken) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '|' ||
           c == '*' || c == '<' || c == '>' || c == ';' || c == '#';
  });
}

Alphabet::Alphabet(std::initializer_list<std::string> names)
    : Alphabet(std::vector<std::string>(names)) {}

Alphabet::Alphabet(std::vector<std::string> names) : symbols_(std::move(names)) {
  for (const auto& name : symbols_) {
    if (!is_valid_symbol_name(name)) {
      throw ContractViolation("invalid action name '" + name + "'");
    }
  }
  std::sort(symbols_.begin(), symbols_.end());
  auto dup = std::adjacent_find(symbols_.begin(), symbols_.end());
  if (dup != symbols_.end()) {
    throw ContractViolation("duplicate action name '" + *dup + "' in alphabet");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const noexcept {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name,
                             [](const std::string& lhs, std::string_view rhs) { return lhs < rhs; });
  if (it == symbols_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::is_subset_of(const Alphabet& other) const noexcept {
  return std::includes(other.symbols_.begin(), other.symbols_.end(), symbols_.begin(),
                       symbols_.end());
}

bool Alphabet::intersects(const Alphabet& other) const noexcept {
  return !intersect(other).empty();
}

Alphabet Alphabet::unite(const Alphabet& other) const {
  Alphabet result;
  std::set_union(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                 std::back_inserter(result.symbols_));
  return result;
}

Alphabet Alphabet::intersect(const Alphabet& other) const {
  Alphabet result;
  std::set_intersection(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                        other.symbols_.end(), std::back_inserter(result.symbols_));
  return result;
}

Alphabet Alphabet::minus(const Alphabet& other) const {
  Alphabet result;
  std::set_difference(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                      other.symbols_.end(), std::back_inserter(result.symbols_));
  return result;
}

std::string to_string(const Alphabet& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i > 0) out += ", ";
    out += alphabet[i];
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Alphabet& alphabet) {
  return os << to_string(alphabet);
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += word[i];
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  Word word;
  std::string token;
  while (in >> token) word.push_back(token);
  if (word.size() == 1 && word.front() == kEpsilonToken) word.clear();
  return word;
}

Word project(const Word& word, const Alphabet& keep) {
  Word out;
  std::copy_if(word.begin(), word.end(), std::back_inserter(out),
               [&](const Symbol& s) { return keep.contains(s); });
  return out;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

}  // namespace pushin
