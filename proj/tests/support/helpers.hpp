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

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "pushin/alphabet.hpp"
#include "pushin/automata.hpp"
#include "pushin/nfa.hpp"

namespace testing {

using pushin::Alphabet;
using pushin::Nfa;
using pushin::Word;

inline Word w(const std::string& text) { return pushin::parse_word(text); }

inline std::vector<Word> ws(std::initializer_list<const char*> words) {
  std::vector<Word> out;
  for (const char* s : words) out.push_back(pushin::parse_word(s));
  return out;
}

inline Nfa lang(const Alphabet& sigma, std::initializer_list<const char*> words) {
  auto list = ws(words);
  return pushin::from_word_set(list, sigma);
}

inline std::vector<Word> words_of(const Nfa& a) { return pushin::enumerate(a); }

inline std::set<Word> set_of(const Nfa& a) {
  auto v = pushin::enumerate(a);
  return {v.begin(), v.end()};
}

inline std::set<Word> set_of(std::initializer_list<const char*> words) {
  auto v = ws(words);
  return {v.begin(), v.end()};
}

}  // namespace testing
