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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pushin/automata.hpp"
#include "pushin/badspec.hpp"
#include "pushin/error.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace pushin;
using testing::lang;
using testing::set_of;
using testing::w;

namespace {

const Alphabet ab{"a", "b"};

// Thompson-style automaton for a* with an epsilon chain, capped at length 2.
Nfa a_star_upto_two() {
  Nfa n(Alphabet{"a"}, 5);
  n.add_transition(0, kEpsilon, 1);
  n.add_transition(1, "a", 2);
  n.add_transition(2, kEpsilon, 3);
  n.add_transition(3, "a", 4);
  n.set_accepting(0);
  n.set_accepting(2);
  n.set_accepting(4);
  n.add_transition(0, kEpsilon, 3);
  return n;
}

}  // namespace

TEST_CASE("intersect") {
  SECTION("set intersection") {
    CHECK(set_of(normalize(intersect(lang(ab, {"a b", "b"}), lang(ab, {"b", "b a"})))) == set_of({"b"}));
  }
  SECTION("empty operand absorbs") {
    CHECK(is_empty_language(intersect(Nfa(ab), lang(ab, {"a", "b"}))));
  }
  SECTION("two-letter words starting with a") {
    BadSpec any2 = parse_badspec("regex: (a|b)(a|b)\nmaxlen: 2", ab);
    BadSpec a_first = parse_badspec("regex: a <ANY>*\nmaxlen: 2", ab);
    Nfa r = intersect(regex_automaton(*any2.pattern, ab), compile_badspec(a_first));
    CHECK(set_of(normalize(r)) == set_of({"a a", "a b"}));
  }
  SECTION("state count bounded by product") {
    Nfa x = lang(ab, {"a b", "b"});
    Nfa y = lang(ab, {"b", "b a"});
    CHECK(intersect(x, y).num_states() <= x.num_states() * y.num_states());
  }
  SECTION("epsilon moves interleave") {
    Nfa eps(ab, 3);
    eps.add_transition(0, kEpsilon, 1);
    eps.add_transition(1, "a", 2);
    eps.set_accepting(2);
    Nfa other(ab, 3);
    other.add_transition(0, "a", 1);
    other.add_transition(1, kEpsilon, 2);
    other.set_accepting(2);
    CHECK(set_of(normalize(intersect(eps, other))) == set_of({"a"}));
  }
  SECTION("alphabet mismatch") {
    CHECK_THROWS_AS(intersect(Nfa(ab), Nfa(Alphabet{"a"})), ContractViolation);
  }
}

TEST_CASE("project") {
  SECTION("drops symbols") {
    CHECK(set_of(normalize(project(lang(ab, {"a b"}), Alphabet{"a"}))) == set_of({"a"}));
  }
  SECTION("identity projection") {
    Nfa x = lang(ab, {"a b", "b", "b b a"});
    CHECK(language_equal(project(x, ab), x));
  }
  SECTION("projection onto nothing keeps only the empty word") {
    Nfa x = lang(ab, {"a b", "b"});
    CHECK(set_of(normalize(project(x, Alphabet{}))) == set_of({""}));
  }
  SECTION("data acquisition sequence onto Comm") {
    Alphabet sigma{"ack", "cerr", "data", "fail", "fire", "msg", "nack", "ok", "pause", "resume", "send", "serr"};
    Nfa x = lang(sigma, {"fire data send msg fire data send cerr fire data pause send"});
    Alphabet comm{"send", "msg", "ack", "nack", "ok", "fail", "cerr"};
    CHECK(set_of(normalize(project(x, comm))) == set_of({"send msg send cerr send"}));
  }
  SECTION("keep must be a subset") {
    CHECK_THROWS_AS(project(Nfa(Alphabet{"a"}), ab), ContractViolation);
  }
}

TEST_CASE("lift_intersect") {
  const Alphabet xay{"a", "x", "y"};
  SECTION("filters by projection") {
    Nfa r = lift_intersect(lang(xay, {"x a y", "x y"}), lang(Alphabet{"a"}, {"a"}));
    CHECK(set_of(normalize(r)) == set_of({"x a y"}));
  }
  SECTION("empty-word filter") {
    Nfa r = lift_intersect(lang(xay, {"x a y", "x y"}), empty_word_automaton(Alphabet{"a"}));
    CHECK(set_of(normalize(r)) == set_of({"x y"}));
  }
  SECTION("same alphabet degenerates to intersection") {
    Nfa x = lang(ab, {"a", "a b", "b b"});
    Nfa y = lang(ab, {"a b", "b b", "b"});
    CHECK(language_equal(lift_intersect(x, y), intersect(x, y)));
  }
  SECTION("result alphabet") {
    CHECK(lift_intersect(lang(xay, {"x"}), lang(Alphabet{"a"}, {""})).alphabet() == xay);
  }
  SECTION("filter alphabet must be a subset") {
    CHECK_THROWS_AS(lift_intersect(Nfa(Alphabet{"a"}), Nfa(ab)), ContractViolation);
  }
}

TEST_CASE("normalize") {
  SECTION("canonical form") {
    Nfa one(ab, 3);
    one.add_transition(0, "a", 1);
    one.add_transition(1, "b", 2);
    one.set_accepting(2);
    Nfa two(ab, 5);
    two.add_transition(0, kEpsilon, 3);
    two.add_transition(3, "a", 4);
    two.add_transition(4, "b", 1);
    two.add_transition(0, "a", 2);
    two.add_transition(2, "b", 1);
    two.set_accepting(1);
    CHECK(normalize(one) == normalize(two));
  }
  SECTION("empty language is one non-accepting state") {
    Nfa e = normalize(lang(ab, {}));
    CHECK(e.num_states() == 1);
    CHECK_FALSE(e.is_accepting(0));
    CHECK(e.num_transitions() == 0);
  }
  SECTION("epsilon chain collapses to a three-state chain") {
    Nfa n = normalize(a_star_upto_two());
    CHECK(n.num_states() == 3);
    CHECK(set_of(n) == set_of({"", "a", "a a"}));
  }
}

TEST_CASE("accepts") {
  SECTION("empty word with accepting initial state") {
    Nfa x(ab);
    x.set_accepting(0);
    CHECK(accepts(x, {}));
  }
  SECTION("wrong order") { CHECK_FALSE(accepts(lang(ab, {"a b"}), w("b a"))); }
  SECTION("pause then send") {
    Alphabet sigma{"ack", "cerr", "data", "fail", "fire", "msg", "nack", "ok", "pause", "resume", "send", "serr"};
    BadSpec spec = parse_badspec("regex: <ANY>* pause <ANY - resume>* send <ANY>*\nmaxlen: 10", sigma);
    CHECK(accepts(compile_badspec(spec), w("pause send")));
    CHECK_FALSE(accepts(compile_badspec(spec), w("pause resume send")));
  }
  SECTION("unknown symbol") { CHECK_THROWS_AS(accepts(Nfa(ab), w("c")), ContractViolation); }
}

TEST_CASE("is_empty_language") {
  CHECK(is_empty_language(Nfa(ab)));
  Nfa init(ab);
  init.set_accepting(0);
  CHECK_FALSE(is_empty_language(init));
  Nfa unreachable(ab, 2);
  unreachable.set_accepting(1);
  CHECK(is_empty_language(unreachable));
}

TEST_CASE("count_words") {
  CHECK(count_words(lang(ab, {"a", "b"})) == 2);
  CHECK(count_words(Nfa(ab)) == 0);
  Nfa loop(ab);
  loop.set_accepting(0);
  loop.add_transition(0, "a", 0);
  CHECK_THROWS_AS(count_words(loop), InfiniteLanguage);
  // A cycle that cannot reach acceptance does not make the language infinite.
  Nfa dead(ab, 3);
  dead.add_transition(0, "a", 1);
  dead.add_transition(0, "b", 2);
  dead.add_transition(2, "b", 2);
  dead.set_accepting(1);
  CHECK(count_words(dead) == 1);
}

TEST_CASE("max_word_length") {
  CHECK(max_word_length(lang(ab, {""})) == 0);
  CHECK(max_word_length(lang(ab, {"a", "a b b"})) == 3);
  CHECK_THROWS_AS(max_word_length(Nfa(ab)), EmptyLanguage);
  Nfa loop(ab);
  loop.set_accepting(0);
  loop.add_transition(0, "b", 0);
  CHECK_THROWS_AS(max_word_length(loop), InfiniteLanguage);
}

TEST_CASE("prefixes_of_length") {
  Nfa x = lang(Alphabet{"a", "b", "c"}, {"a b", "b a", "b"});
  CHECK(set_of(prefixes_of_length(x, 1)) == set_of({"a", "b"}));
  CHECK(set_of(prefixes_of_length(x, 2)) == set_of({"a b", "b a"}));
  CHECK(is_empty_language(prefixes_of_length(lang(Alphabet{"a", "b", "c"}, {"a b c"}), 4)));
  CHECK(set_of(prefixes_of_length(x, 0)) == set_of({""}));
}

TEST_CASE("from_word_set") {
  CHECK(is_empty_language(lang(ab, {})));
  CHECK(set_of(lang(ab, {""})) == set_of({""}));
  Nfa x = lang(ab, {"a b", "a"});
  CHECK(count_words(x) == 2);
  CHECK(set_of(x) == set_of({"a b", "a"}));
  auto bad = testing::ws({"c"});
  CHECK_THROWS_AS(from_word_set(bad, ab), ContractViolation);
}

TEST_CASE("enumerate is shortlex") {
  CHECK(testing::words_of(lang(ab, {"b", "a b", "a a"})) == testing::ws({"b", "a a", "a b"}));
  CHECK(testing::words_of(Nfa(ab)).empty());
  CHECK(testing::words_of(lang(ab, {"a b", "a", "b"})) == testing::ws({"a", "b", "a b"}));
}

TEST_CASE("first_word works on infinite languages") {
  Nfa loop(ab, 2);
  loop.add_transition(0, "b", 0);
  loop.add_transition(0, "a", 1);
  loop.set_accepting(1);
  CHECK(first_word(loop) == w("a"));
  CHECK_FALSE(first_word(Nfa(ab)).has_value());
}

TEST_CASE("language relations") {
  CHECK(language_subset(lang(ab, {"a"}), lang(ab, {"a", "b"})));
  CHECK_FALSE(language_subset(lang(ab, {"a", "b"}), lang(ab, {"a"})));
  CHECK(set_of(normalize(unite(lang(ab, {"a"}), lang(ab, {"b"})))) == set_of({"a", "b"}));
  CHECK(is_finite_language(lang(ab, {"a"})));
  CHECK(is_finite_language(length_window(ab, 0, 2)));
}

TEST_CASE("append_any_symbol and length_window") {
  CHECK(set_of(normalize(append_any_symbol(lang(ab, {"", "a"})))) == set_of({"a", "b", "a a", "a b"}));
  CHECK(count_words(length_window(ab, 1, 3)) == 2 + 4 + 8);
  CHECK(set_of(word_automaton(w("b a"), ab)) == set_of({"b a"}));
}

TEST_CASE("random instances agree with enumeration") {
  std::mt19937_64 rng(7);
  const Alphabet sigma{"a", "b", "c"};
  for (int round = 0; round < 300; ++round) {
    Nfa x = oracle::random_acyclic_nfa(rng, sigma, 5, 8, true);
    Nfa y = oracle::random_acyclic_nfa(rng, sigma, 5, 8, true);
    auto lx = oracle::language_upto(x, 6);
    auto ly = oracle::language_upto(y, 6);

    // intersection membership
    auto li = oracle::language_upto(intersect(x, y), 6);
    std::set<Word> expected;
    for (const auto& v : lx) {
      if (ly.count(v)) expected.insert(v);
    }
    REQUIRE(li == expected);

    // normalize preserves the language and is idempotent
    Nfa nx = normalize(x);
    REQUIRE(oracle::language_upto(nx, 6) == lx);
    REQUIRE(normalize(nx) == nx);

    // counting, enumeration and longest word
    auto listed = enumerate(x);
    REQUIRE(count_words(x) == listed.size());
    REQUIRE(std::set<Word>(listed.begin(), listed.end()) == lx);
    if (!listed.empty()) REQUIRE(max_word_length(x) == listed.back().size());

    // prefixes
    for (std::size_t j = 0; j <= 4; ++j) {
      std::set<Word> brute;
      for (const auto& v : lx) {
        if (v.size() >= j) brute.insert(Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j)));
      }
      REQUIRE(oracle::language_upto(prefixes_of_length(x, j), 6) == brute);
    }

    // projection algebra
    const Alphabet k1{"a", "b"};
    const Alphabet k2{"a"};
    REQUIRE(language_equal(project(project(x, k1), k2), project(x, k2)));

    // lift_intersect against the filter definition
    Nfa f = oracle::random_nfa(rng, k1, 3, 4, false);
    std::set<Word> lifted;
    for (const auto& v : lx) {
      if (oracle::naive_accepts(f, oracle::drop_to(v, k1))) lifted.insert(v);
    }
    REQUIRE(oracle::language_upto(lift_intersect(x, f), 6) == lifted);
  }
}
