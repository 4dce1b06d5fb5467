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

#include <functional>
#include <memory>
#include <string>

#include "pushin/alphabet.hpp"
#include "pushin/lts.hpp"
#include "pushin/nfa.hpp"

namespace pushin {

struct Interface {
  Alphabet inputs;
  Alphabet outputs;

  Alphabet actions() const { return inputs.unite(outputs); }
  bool operator==(const Interface&) const = default;
};

/// Yes/no access to a black-box: does it exhibit a given observable
/// behavior? Implementations must answer yes for the empty behavior, be
/// prefix-closed, and tolerate concurrent queries.
class BlackBoxOracle {
 public:
  virtual ~BlackBoxOracle() = default;
  virtual bool query(const Word& behavior) const = 0;
};

/// Oracle backed by a simulated unit.
class UnitOracle final : public BlackBoxOracle {
 public:
  explicit UnitOracle(Unit unit);
  bool query(const Word& behavior) const override;
  const Unit& unit() const noexcept { return unit_; }

 private:
  Unit unit_;
  Nfa behaviors_;
};

/// Oracle backed by an arbitrary callable.
class FunctionOracle final : public BlackBoxOracle {
 public:
  explicit FunctionOracle(std::function<bool(const Word&)> fn) : fn_(std::move(fn)) {}
  bool query(const Word& behavior) const override { return fn_(behavior); }

 private:
  std::function<bool(const Word&)> fn_;
};

}  // namespace pushin
