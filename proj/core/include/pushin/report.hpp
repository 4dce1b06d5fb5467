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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pushin/engine.hpp"

namespace pushin {

/// JSON document with `mode`, `verdict`, `cause`, `causeStep`, `witness`
/// (array or null) and `steps`; counts are decimal strings. `extra` adds
/// top-level string fields.
std::string report_json(const Verdict& verdict, std::string_view mode = "push-in",
                        const std::vector<std::pair<std::string, std::string>>& extra = {});

/// Fixed-width table, one row per executed step.
std::string report_table(const Verdict& verdict);

}  // namespace pushin
