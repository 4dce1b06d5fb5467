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

#include "pushin/oracle.hpp"

#include "pushin/automata.hpp"

namespace pushin {

UnitOracle::UnitOracle(Unit unit) : unit_(std::move(unit)), behaviors_(lts_to_nfa(unit_)) {}

bool UnitOracle::query(const Word& behavior) const { return accepts(behaviors_, behavior); }

}  // namespace pushin
