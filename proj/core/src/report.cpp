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

#include "pushin/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace pushin {

std::string report_json(const Verdict& verdict, std::string_view mode,
                        const std::vector<std::pair<std::string, std::string>>& extra) {
  nlohmann::ordered_json doc;
  doc["mode"] = std::string(mode);
  for (const auto& [key, value] : extra) doc[key] = value;
  doc["verdict"] = to_string(verdict.answer);
  doc["cause"] = to_string(verdict.cause.kind);
  doc["causeStep"] = verdict.cause.step;
  if (verdict.witness) {
    doc["witness"] = *verdict.witness;
  } else {
    doc["witness"] = nullptr;
  }
  doc["steps"] = nlohmann::ordered_json::array();
  for (const auto& r : verdict.reports) {
    nlohmann::ordered_json row;
    row["i"] = r.i;
    row["blackbox"] = r.blackbox;
    row["countA"] = to_decimal(r.count_a);
    row["countU"] = to_decimal(r.count_u);
    row["countSUV"] = to_decimal(r.count_suv);
    row["testsRun"] = std::to_string(r.tests_run);
    doc["steps"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string report_table(const Verdict& verdict) {
  std::vector<std::vector<std::string>> rows{{"step", "blackbox", "#A", "#U", "#SUV", "TC"}};
  for (const auto& r : verdict.reports) {
    rows.push_back({std::to_string(r.i), r.blackbox, to_decimal(r.count_a), to_decimal(r.count_u),
                    to_decimal(r.count_suv), std::to_string(r.tests_run)});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  if (rows.size() == 1) rows.clear();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      if (c < 2) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  }
  out << "verdict: " << to_string(verdict.answer) << " (" << to_string(verdict.cause.kind);
  if (verdict.cause.step > 0) out << " at step " << verdict.cause.step;
  out << ")\n";
  if (verdict.witness) {
    out << "witness: " << (verdict.witness->empty() ? std::string(kEpsilonToken) : to_string(*verdict.witness)) << '\n';
  }
  return out.str();
}

}  // namespace pushin
