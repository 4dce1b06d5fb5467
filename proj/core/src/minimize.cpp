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

// Subset construction, Hopcroft partition refinement and canonical
// renumbering.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>

#include "pushin/automata.hpp"

namespace pushin {
namespace {

struct StateSetHash {
  std::size_t operator()(const StateSet& set) const noexcept {
    std::size_t h = set.size();
    for (State s : set) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Epsilon closure with a reusable visit stamp.
class Closer {
 public:
  explicit Closer(const Nfa& nfa) : nfa_(nfa), stamp_(nfa.num_states(), 0) {}

  StateSet close(const StateSet& seeds) {
    ++generation_;
    StateSet out;
    stack_.clear();
    for (State s : seeds) visit(s);
    while (!stack_.empty()) {
      State s = stack_.back();
      stack_.pop_back();
      out.push_back(s);
      for (const Edge& e : nfa_.edges(s)) {
        if (e.label == kEpsilon) visit(e.target);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void visit(State s) {
    if (stamp_[s] != generation_) {
      stamp_[s] = generation_;
      stack_.push_back(s);
    }
  }

  const Nfa& nfa_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  StateSet stack_;
};

constexpr State kNoState = static_cast<State>(-1);

// Complete transition table of a DFA with an explicit sink appended as the
// last state.
struct DfaTable {
  std::size_t num_states = 0;  // including the sink
  std::size_t sigma = 0;
  State initial = 0;
  std::vector<State> delta;  // num_states * sigma
  std::vector<char> accepting;

  State next(State s, std::size_t c) const { return delta[s * sigma + c]; }
};

DfaTable complete(const Nfa& dfa) {
  DfaTable t;
  t.sigma = dfa.alphabet().size();
  t.num_states = dfa.num_states() + 1;
  const State sink = static_cast<State>(dfa.num_states());
  t.initial = dfa.initial();
  t.delta.assign(t.num_states * t.sigma, sink);
  t.accepting.assign(t.num_states, 0);
  for (State s = 0; s < dfa.num_states(); ++s) {
    t.accepting[s] = dfa.is_accepting(s) ? 1 : 0;
    for (const Edge& e : dfa.edges(s)) t.delta[s * t.sigma + e.label] = e.target;
  }
  return t;
}

// Hopcroft's algorithm. Returns the block index of every state.
std::vector<std::uint32_t> refine(const DfaTable& t) {
  const std::size_t n = t.num_states;
  const std::size_t sigma = t.sigma;

  // Inverse transitions in CSR layout, keyed by (target, symbol).
  std::vector<std::size_t> inv_start(n * sigma + 1, 0);
  for (State s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < sigma; ++c) ++inv_start[t.next(s, c) * sigma + c + 1];
  }
  for (std::size_t i = 1; i < inv_start.size(); ++i) inv_start[i] += inv_start[i - 1];
  std::vector<State> inv(n * sigma);
  {
    std::vector<std::size_t> fill(inv_start.begin(), inv_start.end() - 1);
    for (State s = 0; s < n; ++s) {
      for (std::size_t c = 0; c < sigma; ++c) inv[fill[t.next(s, c) * sigma + c]++] = s;
    }
  }

  std::vector<State> elems;
  elems.reserve(n);
  for (State s = 0; s < n; ++s) {
    if (t.accepting[s]) elems.push_back(s);
  }
  const std::size_t num_accepting = elems.size();
  for (State s = 0; s < n; ++s) {
    if (!t.accepting[s]) elems.push_back(s);
  }
  std::vector<std::size_t> loc(n);
  for (std::size_t i = 0; i < n; ++i) loc[elems[i]] = i;

  std::vector<std::size_t> first;
  std::vector<std::size_t> end;
  std::vector<std::size_t> marked;
  std::vector<std::uint32_t> block_of(n, 0);

  auto new_block = [&](std::size_t b, std::size_t e) {
    first.push_back(b);
    end.push_back(e);
    marked.push_back(0);
    return static_cast<std::uint32_t>(first.size() - 1);
  };

  if (num_accepting == 0 || num_accepting == n) {
    return block_of;  // a single block
  }
  std::uint32_t acc = new_block(0, num_accepting);
  std::uint32_t rej = new_block(num_accepting, n);
  for (std::size_t i = num_accepting; i < n; ++i) block_of[elems[i]] = rej;

  std::vector<char> in_work(n * sigma, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  {
    std::uint32_t smaller = num_accepting <= n - num_accepting ? acc : rej;
    for (std::size_t c = 0; c < sigma; ++c) {
      work.emplace_back(smaller, static_cast<std::uint32_t>(c));
      in_work[smaller * sigma + c] = 1;
    }
  }

  std::vector<State> splitter;
  std::vector<std::uint32_t> touched;
  while (!work.empty()) {
    auto [b, c] = work.back();
    work.pop_back();
    in_work[b * sigma + c] = 0;

    splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(first[b]),
                    elems.begin() + static_cast<std::ptrdiff_t>(end[b]));
    for (State q : splitter) {
      for (std::size_t k = inv_start[q * sigma + c]; k < inv_start[q * sigma + c + 1]; ++k) {
        State p = inv[k];
        std::uint32_t pb = block_of[p];
        std::size_t boundary = first[pb] + marked[pb];
        if (loc[p] < boundary) continue;
        State other = elems[boundary];
        std::swap(elems[loc[p]], elems[boundary]);
        loc[other] = loc[p];
        loc[p] = boundary;
        if (marked[pb]++ == 0) touched.push_back(pb);
      }
    }

    for (std::uint32_t pb : touched) {
      std::size_t m = marked[pb];
      marked[pb] = 0;
      if (m == end[pb] - first[pb]) continue;
      std::uint32_t nb = new_block(first[pb], first[pb] + m);
      first[pb] += m;
      for (std::size_t i = first[nb]; i < end[nb]; ++i) block_of[elems[i]] = nb;
      for (std::size_t d = 0; d < sigma; ++d) {
        if (in_work[pb * sigma + d]) {
          work.emplace_back(nb, static_cast<std::uint32_t>(d));
          in_work[nb * sigma + d] = 1;
        } else {
          std::uint32_t pick = (end[nb] - first[nb]) <= (end[pb] - first[pb]) ? nb : pb;
          work.emplace_back(pick, static_cast<std::uint32_t>(d));
          in_work[pick * sigma + d] = 1;
        }
      }
    }
    touched.clear();
  }
  return block_of;
}

// Minimal trim DFA in canonical breadth-first numbering.
Nfa canonical_minimal(const Nfa& dfa) {
  DfaTable table = complete(dfa);
  std::vector<std::uint32_t> block_of = refine(table);
  const State sink = static_cast<State>(table.num_states - 1);
  const std::uint32_t dead = block_of[sink];

  if (block_of[table.initial] == dead) return Nfa(dfa.alphabet());

  std::size_t num_blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
  std::vector<State> representative(num_blocks, kNoState);
  for (State s = 0; s < table.num_states; ++s) {
    if (representative[block_of[s]] == kNoState) representative[block_of[s]] = s;
  }

  std::vector<State> number(num_blocks, kNoState);
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> queue;
  number[block_of[table.initial]] = 0;
  order.push_back(block_of[table.initial]);
  queue.push_back(block_of[table.initial]);
  while (!queue.empty()) {
    std::uint32_t b = queue.front();
    queue.pop_front();
    State rep = representative[b];
    for (std::size_t c = 0; c < table.sigma; ++c) {
      std::uint32_t tb = block_of[table.next(rep, c)];
      if (tb == dead || number[tb] != kNoState) continue;
      number[tb] = static_cast<State>(order.size());
      order.push_back(tb);
      queue.push_back(tb);
    }
  }

  Nfa out(dfa.alphabet(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    State rep = representative[order[i]];
    out.set_accepting(static_cast<State>(i), table.accepting[rep] != 0);
    for (std::size_t c = 0; c < table.sigma; ++c) {
      std::uint32_t tb = block_of[table.next(rep, c)];
      if (tb == dead) continue;
      out.add_transition(static_cast<State>(i), static_cast<Label>(c), number[tb]);
    }
  }
  return out;
}

}  // namespace

Nfa determinize(const Nfa& a) {
  const std::size_t sigma = a.alphabet().size();
  Closer closer(a);
  std::unordered_map<StateSet, State, StateSetHash> ids;
  std::vector<StateSet> subsets;

  Nfa out(a.alphabet());
  subsets.push_back(closer.close(StateSet{a.initial()}));
  ids.emplace(subsets.front(), 0);

  std::vector<StateSet> buckets(sigma);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (auto& bucket : buckets) bucket.clear();
    bool accepting = false;
    for (State s : subsets[i]) {
      accepting = accepting || a.is_accepting(s);
      for (const Edge& e : a.edges(s)) {
        if (e.label != kEpsilon) buckets[static_cast<std::size_t>(e.label)].push_back(e.target);
      }
    }
    out.set_accepting(static_cast<State>(i), accepting);
    for (std::size_t c = 0; c < sigma; ++c) {
      if (buckets[c].empty()) continue;
      StateSet next = closer.close(buckets[c]);
      auto [it, inserted] = ids.emplace(next, static_cast<State>(subsets.size()));
      if (inserted) {
        subsets.push_back(std::move(next));
        out.add_state();
      }
      out.add_transition(static_cast<State>(i), static_cast<Label>(c), it->second);
    }
  }
  return out;
}

Nfa normalize(const Nfa& a) { return canonical_minimal(determinize(a)); }

Nfa trim(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::vector<char> reach(n, 0);
  std::vector<State> stack{a.initial()};
  reach[a.initial()] = 1;
  std::vector<std::vector<State>> reverse(n);
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(s)) {
      if (!reach[e.target]) {
        reach[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  for (State s = 0; s < n; ++s) {
    for (const Edge& e : a.edges(s)) reverse[e.target].push_back(s);
  }
  std::vector<char> live(n, 0);
  for (State s = 0; s < n; ++s) {
    if (a.is_accepting(s) && reach[s]) {
      live[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : reverse[s]) {
      if (reach[p] && !live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
    }
  }
  if (!live[a.initial()]) return Nfa(a.alphabet());

  std::vector<State> number(n, kNoState);
  std::size_t count = 0;
  number[a.initial()] = static_cast<State>(count++);
  for (State s = 0; s < n; ++s) {
    if (live[s] && number[s] == kNoState) number[s] = static_cast<State>(count++);
  }
  Nfa out(a.alphabet(), count);
  for (State s = 0; s < n; ++s) {
    if (!live[s]) continue;
    out.set_accepting(number[s], a.is_accepting(s));
    for (const Edge& e : a.edges(s)) {
      if (live[e.target]) out.add_transition(number[s], e.label, number[e.target]);
    }
  }
  return out;
}

}  // namespace pushin
