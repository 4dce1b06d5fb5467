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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pushin {

/// An observable action name.
using Symbol = std::string;

/// A finite sequence of observable actions. The internal action never
/// appears in a word.
using Word = std::vector<Symbol>;

/// Token reserved for internal moves in every text format.
inline constexpr std::string_view kEpsilonToken = "eps";

/// True when `name` can be an action name: nonempty, no whitespace, not the
/// reserved epsilon token, none of the regex metacharacters `()|*<>;`.
bool is_valid_symbol_name(std::string_view name) noexcept;

/// Finite set of action names kept in lexicographic order, so that the index
/// of a symbol is also its rank. Word comparisons by index therefore agree
/// with comparisons by name.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> names);
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::string& operator[](std::size_t index) const { return symbols_[index]; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept { return index_of(name).has_value(); }

  bool is_subset_of(const Alphabet& other) const noexcept;
  bool intersects(const Alphabet& other) const noexcept;

  Alphabet unite(const Alphabet& other) const;
  Alphabet intersect(const Alphabet& other) const;
  Alphabet minus(const Alphabet& other) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

std::string to_string(const Alphabet& alphabet);
std::ostream& operator<<(std::ostream& os, const Alphabet& alphabet);

/// Space-separated rendering; the empty word renders as the empty string.
std::string to_string(const Word& word);

/// Splits on whitespace. The single token `eps` denotes the empty word.
Word parse_word(std::string_view text);

/// Drops every symbol not in `keep`.
Word project(const Word& word, const Alphabet& keep);

/// Length-then-lexicographic comparison.
bool shortlex_less(const Word& lhs, const Word& rhs);

}  // namespace pushin
