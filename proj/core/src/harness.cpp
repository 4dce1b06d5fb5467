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

#include "pushin/harness.hpp"

#include "pushin/automata.hpp"
#include "pushin/error.hpp"

namespace pushin {
namespace {

// The gluer routes sensor readings to Comm and pauses the Timer while it
// handles an error. G3/G9 wait for Comm to settle before resuming.
constexpr std::string_view kGluer = R"(unit Gluer
inputs data serr ok fail cerr
outputs send pause resume
states G0 G1 G2 G3 G4 G5 G6 G7 G8 G9
initial G0
trans G0 data G1
trans G0 serr G2
trans G0 cerr G5
trans G0 ok G0
trans G0 fail G0
trans G1 send G0
trans G2 pause G3
trans G3 data G4
trans G3 ok G6
trans G3 fail G6
trans G3 cerr G9
trans G4 send G3
trans G5 data G7
trans G5 pause G9
trans G7 pause G8
trans G8 send G9
trans G9 ok G6
trans G9 fail G6
trans G9 cerr G9
trans G6 resume G0
)";

constexpr std::string_view kTimer = R"(unit Timer
inputs pause resume
outputs fire
states t0 t1
initial t0
trans t0 fire t0
trans t0 pause t1
trans t1 resume t0
)";

// s2 holds one pending fire; serr is only possible while a reading is due.
constexpr std::string_view kSensor = R"(unit Sensor
inputs fire
outputs data serr
states s0 s1 s2 s3
initial s0
trans s0 fire s1
trans s1 data s0
trans s1 fire s2
trans s1 serr s3
trans s2 data s1
trans s2 serr s3
trans s3 data s0
)";

// A second send while a message is in flight produces cerr.
constexpr std::string_view kComm = R"(unit Comm
inputs send ack nack
outputs msg ok fail cerr
states s0 s1 s2 s3 s4 s5
initial s0
trans s0 send s1
trans s1 msg s2
trans s2 ack s3
trans s2 nack s4
trans s2 send s5
trans s3 ok s0
trans s4 fail s0
trans s5 cerr s0
)";

constexpr std::string_view kCommFixed = R"(unit Comm
inputs send ack nack
outputs msg ok fail cerr
states s0 s1 s2 s3 s4 s5
initial s0
trans s0 send s1
trans s1 msg s2
trans s2 ack s3
trans s2 nack s4
trans s2 send s5
trans s3 ok s0
trans s4 fail s0
trans s5 cerr s2
)";

}  // namespace

std::string to_string(CommVariant variant) {
  return variant == CommVariant::baseline ? "baseline" : "commFixed";
}

CommVariant parse_comm_variant(std::string_view text) {
  if (text == "baseline") return CommVariant::baseline;
  if (text == "commFixed") return CommVariant::comm_fixed;
  throw ContractViolation("unknown variant '" + std::string(text) + "' (baseline or commFixed)");
}

std::string_view data_acquisition_unit_text(std::string_view unit, CommVariant variant) {
  if (unit == "Gluer") return kGluer;
  if (unit == "Timer") return kTimer;
  if (unit == "Sensor") return kSensor;
  if (unit == "Comm") return variant == CommVariant::baseline ? kComm : kCommFixed;
  throw ContractViolation("unknown data-acquisition unit '" + std::string(unit) + "'");
}

Unit data_acquisition_unit(std::string_view unit, CommVariant variant) {
  return parse_unit(data_acquisition_unit_text(unit, variant), std::string(unit) + ".unit");
}

SystemDescription build_data_acquisition_system(CommVariant variant) {
  SystemDescription sys{data_acquisition_unit("Gluer"), {}};
  for (std::string_view name : {"Timer", "Sensor", "Comm"}) {
    sys.blackboxes.push_back(simulated_blackbox(data_acquisition_unit(name, variant)));
  }
  sys.validate();
  return sys;
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::case1: return "case1";
    case CaseId::case2: return "case2";
    case CaseId::case3: return "case3";
    case CaseId::case4: return "case4";
  }
  return "?";
}

CaseId parse_case(std::string_view text) {
  if (text == "case1") return CaseId::case1;
  if (text == "case2") return CaseId::case2;
  if (text == "case3") return CaseId::case3;
  if (text == "case4") return CaseId::case4;
  throw ContractViolation("unknown case '" + std::string(text) + "' (case1..case4)");
}

std::string_view case_regex(CaseId id) {
  switch (id) {
    case CaseId::case1: return "<ANY>* pause <ANY - resume>* send <ANY>*";
    case CaseId::case2:
    case CaseId::case3: return "<ANY>* cerr <ANY - resume>* cerr <ANY>*";
    case CaseId::case4:
      return "<ANY>* serr <ANY - resume>* fire <ANY - resume>* fire <ANY - resume>* resume <ANY>*";
  }
  return "";
}

ExperimentCase standard_case(CaseId id, std::size_t maxlen) {
  return ExperimentCase{id, maxlen, id == CaseId::case3 ? CommVariant::comm_fixed : CommVariant::baseline};
}

BadSpec case_badspec(CaseId id, std::size_t maxlen) {
  const Alphabet sigma = build_data_acquisition_system(CommVariant::baseline).alphabet();
  std::string text = "regex: " + std::string(case_regex(id)) + "\nmaxlen: " + std::to_string(maxlen) + "\n";
  return parse_badspec(text, sigma, to_string(id) + ".bad");
}

ExperimentResult run_experiment(const ExperimentCase& experiment, const EngineOptions& options) {
  if (experiment.maxlen == 0) throw ContractViolation("run_experiment: maxlen must be positive");
  SystemDescription sys = build_data_acquisition_system(experiment.variant);
  ExperimentResult result;
  result.experiment = experiment;
  result.m_bad = compile_badspec(case_badspec(experiment.id, experiment.maxlen));
  const std::vector<std::size_t> order{sys.blackbox_index("Timer"), sys.blackbox_index("Sensor"),
                                       sys.blackbox_index("Comm")};
  result.verdict = run_pushin(sys, result.m_bad, order, options, &result.trace);
  return result;
}

}  // namespace pushin
