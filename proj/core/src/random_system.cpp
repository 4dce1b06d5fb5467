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

#include <algorithm>
#include <random>
#include <set>

#include "pushin/automata.hpp"
#include "pushin/error.hpp"
#include "pushin/harness.hpp"

namespace pushin {
namespace {

// Modulo reduction keeps the streams identical across standard libraries,
// which std::uniform_int_distribution does not promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return static_cast<double>(engine_() % 1000000) < p * 1000000.0; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::string action_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index);
}

Unit random_unit(Rng& rng, std::string name, const std::vector<std::string>& actions,
                 std::size_t max_states) {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  for (const auto& a : actions) (rng.chance(0.5) ? inputs : outputs).push_back(a);
  Unit unit(std::move(name), Alphabet(inputs), Alphabet(outputs));
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(max_states, 1));
  for (std::size_t s = 0; s < n; ++s) unit.add_state("q" + std::to_string(s));
  const std::vector<std::string> labels = unit.interface().symbols();
  auto random_label = [&]() -> Label {
    if (rng.chance(0.1)) return kEpsilon;
    return static_cast<Label>(rng.below(labels.size()));
  };
  // Spanning tree first so that every state is reachable.
  for (State s = 1; s < n; ++s) unit.add_transition(static_cast<State>(rng.below(s)), random_label(), s);
  const std::size_t extra = rng.below(2 * n + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    unit.add_transition(static_cast<State>(rng.below(n)), random_label(), static_cast<State>(rng.below(n)));
  }
  return unit;
}

Word random_walk(Rng& rng, const Nfa& behaviors, std::size_t length) {
  Word word;
  State s = behaviors.initial();
  for (std::size_t steps = 0; word.size() < length && steps < 4 * length + 4; ++steps) {
    auto edges = behaviors.edges(s);
    if (edges.empty()) break;
    const Edge& e = edges[rng.below(edges.size())];
    if (e.label != kEpsilon) word.push_back(behaviors.alphabet()[e.label]);
    s = e.target;
  }
  return word;
}

Rng seeded(const RandomSystemParams& p, std::uint64_t stream) {
  return Rng(p.seed * 0x9E3779B97F4A7C15ULL + stream);
}

}  // namespace

SystemDescription generate_random_system(const RandomSystemParams& params) {
  if (params.k == 0) throw ContractViolation("generate_random_system: k must be at least 1");
  if (params.actions_per_unit == 0) throw ContractViolation("generate_random_system: no actions");
  Rng rng = seeded(params, 1);
  std::size_t next_action = 0;

  std::vector<std::vector<std::string>> box_actions(params.k);
  for (std::size_t i = 0; i < params.k; ++i) {
    auto& acts = box_actions[i];
    if (i > 0 && params.actions_per_unit > 1 && rng.chance(params.sharing_density)) {
      acts.push_back(rng.pick(box_actions[i - 1]));
    }
    const std::size_t fresh = 1 + rng.below(params.actions_per_unit - acts.size());
    for (std::size_t j = 0; j < fresh; ++j) acts.push_back(action_name(next_action++));
  }

  std::vector<std::string> pool;
  {
    std::set<std::string> seen;
    for (const auto& acts : box_actions) {
      for (const auto& a : acts) {
        if (seen.insert(a).second) pool.push_back(a);
      }
    }
    pool.push_back(action_name(next_action++));  // gluer-only candidate
  }
  std::vector<std::string> gluer_actions;
  const std::size_t g = 1 + rng.below(std::min(params.actions_per_unit, pool.size()));
  while (gluer_actions.size() < g) {
    std::size_t at = rng.below(pool.size());
    gluer_actions.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }

  SystemDescription sys{random_unit(rng, "G", gluer_actions, params.max_states_per_unit), {}};
  for (std::size_t i = 0; i < params.k; ++i) {
    sys.blackboxes.push_back(simulated_blackbox(
        random_unit(rng, "B" + std::to_string(i + 1), box_actions[i], params.max_states_per_unit)));
  }
  sys.validate();
  return sys;
}

BadSpec generate_random_badspec(const SystemDescription& sys, const RandomSystemParams& params) {
  Rng rng = seeded(params, 2);
  const Alphabet sigma = sys.alphabet();
  const std::vector<std::string>& names = sigma.symbols();
  const std::size_t maxlen = 1 + rng.below(std::max<std::size_t>(params.bad_max_len, 1));

  std::string text;
  switch (rng.below(3)) {
    case 0: {
      text = "list:\n";
      const Nfa behaviors = sys.has_implementations() ? lts_to_nfa(compose(sys.units())) : Nfa(sigma);
      const std::size_t count = 1 + rng.below(4);
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = 1 + rng.below(maxlen);
        Word w;
        if (rng.chance(0.5)) {
          w = random_walk(rng, behaviors, len);
        } else {
          for (std::size_t j = 0; j < len; ++j) w.push_back(rng.pick(names));
        }
        text += (w.empty() ? std::string(kEpsilonToken) : to_string(w)) + "\n";
      }
      break;
    }
    case 1: {
      text = "regex: <ANY>* " + rng.pick(names) + " <ANY>* " + rng.pick(names) + " <ANY>*\n";
      break;
    }
    default: {
      const std::string x = rng.pick(names);
      const std::string y = rng.pick(names);
      const std::string z = rng.pick(names);
      if (rng.chance(0.5)) {
        text = "regex: " + x + " <ANY>* (" + y + " | " + z + ")\n";
      } else {
        text = "regex: <ANY>* " + x + " <ANY - " + z + ">* " + y + " <ANY>*\n";
      }
      break;
    }
  }
  text += "maxlen: " + std::to_string(maxlen) + "\n";
  return parse_badspec(text, sigma, "random.bad");
}

}  // namespace pushin
