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

// pushin: command-line driver.
//
//   pushin check      --system S --bad B [--order auto|n1,n2] [--report R] [--jobs N]
//   pushin oracle     --system S --bad B [--report R]
//   pushin experiment CASE [--maxlen N] [--variant baseline|commFixed] [--long]
//   pushin gen-random --out DIR [--k N] [--states N] [--actions N] ...
//   pushin fmt        FILE [--system S]
//
// Exit status: 0 = no bad behavior, 1 = bad behavior found, 2 = error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pushin/automata.hpp"
#include "pushin/badspec.hpp"
#include "pushin/engine.hpp"
#include "pushin/error.hpp"
#include "pushin/harness.hpp"
#include "pushin/report.hpp"
#include "pushin/system.hpp"

namespace fs = std::filesystem;
using namespace pushin;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Config {
  std::string system_path;
  std::string bad_path;
  std::string order = "auto";
  std::string report_path;
  std::size_t jobs = 1;
  std::string variant;
  std::size_t maxlen = 10;
  std::string case_name;
  bool allow_long = false;
  bool quiet = false;
  std::string out_dir;
  std::string file;
  RandomSystemParams random;
};

int exit_code(const Verdict& v) { return v.answer == Answer::yes ? kExitYes : kExitNo; }

void emit(const Config& cfg, const Verdict& verdict, std::string_view mode,
          const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  if (!cfg.quiet) std::cout << report_table(verdict);
  if (!cfg.report_path.empty()) write_text_file(cfg.report_path, report_json(verdict, mode, extra));
}

Nfa load_bad(const SystemDescription& sys, const std::string& path) {
  return compile_badspec(parse_badspec(read_text_file(path), sys.alphabet(), path));
}

int cmd_check(const Config& cfg) {
  SystemDescription sys = load_system(cfg.system_path);
  Nfa bad = load_bad(sys, cfg.bad_path);
  std::vector<std::size_t> order = resolve_order(sys, cfg.order);
  Verdict v = run_pushin(sys, bad, order, EngineOptions{cfg.jobs});
  emit(cfg, v, "push-in");
  return exit_code(v);
}

int cmd_oracle(const Config& cfg) {
  SystemDescription sys = load_system(cfg.system_path);
  for (const auto& box : sys.blackboxes) {
    if (!box.implementation) {
      std::cerr << "error: black-box '" << box.name << "' has no 'impl'; the brute-force oracle needs all implementations\n";
      return kExitError;
    }
  }
  Nfa bad = load_bad(sys, cfg.bad_path);
  Verdict v = brute_force_verdict(sys, bad);
  emit(cfg, v, "brute-force");
  return exit_code(v);
}

int cmd_experiment(const Config& cfg) {
  ExperimentCase ec = standard_case(parse_case(cfg.case_name), cfg.maxlen);
  if (!cfg.variant.empty()) ec.variant = parse_comm_variant(cfg.variant);
  if (ec.maxlen == 0) throw ContractViolation("--maxlen must be positive");
  if (ec.maxlen > 10 && !cfg.allow_long) {
    std::cerr << "error: maxlen " << ec.maxlen << " is above the default scale of 10; pass --long to run it\n";
    return kExitError;
  }
  ExperimentResult r = run_experiment(ec, EngineOptions{cfg.jobs});
  if (!cfg.quiet) {
    std::cout << to_string(ec.id) << " maxlen " << ec.maxlen << " variant " << to_string(ec.variant)
              << " #M_Bad " << to_decimal(count_words(r.m_bad)) << "\n";
  }
  emit(cfg, r.verdict, "push-in",
       {{"case", to_string(ec.id)}, {"maxlen", std::to_string(ec.maxlen)}, {"variant", to_string(ec.variant)}});
  return exit_code(r.verdict);
}

int cmd_gen_random(Config cfg) {
  if (const char* seed = std::getenv("PUSHIN_SEED"); seed && cfg.random.seed == 0) {
    cfg.random.seed = std::stoull(seed);
  }
  if (cfg.random.seed == 0) cfg.random.seed = 1;
  SystemDescription sys = generate_random_system(cfg.random);
  BadSpec bad = generate_random_badspec(sys, cfg.random);
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  write_text_file(dir / (sys.gluer.name() + ".unit"), to_text(sys.gluer));
  for (const auto& box : sys.blackboxes) {
    write_text_file(dir / (box.name + ".unit"), to_text(*box.implementation));
  }
  write_text_file(dir / "system.sys", to_text(sys));
  write_text_file(dir / "bad.txt", to_text(bad));
  if (!cfg.quiet) std::cout << "seed " << cfg.random.seed << " written to " << dir.string() << "\n";
  return 0;
}

int cmd_fmt(const Config& cfg) {
  const fs::path path(cfg.file);
  const std::string ext = path.extension().string();
  const std::string text = read_text_file(path);
  if (ext == ".unit") {
    std::cout << to_text(parse_unit(text, path.string()));
  } else if (ext == ".nfa") {
    std::cout << to_text(parse_nfa(text, path.string()));
  } else if (ext == ".sys") {
    std::cout << to_text(load_system(path));
  } else {
    if (cfg.system_path.empty()) {
      std::cerr << "error: formatting a bad spec needs --system for the alphabet\n";
      return kExitError;
    }
    SystemDescription sys = load_system(cfg.system_path);
    std::cout << to_text(parse_badspec(text, sys.alphabet(), path.string()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a system of black-boxes exhibits a bad behavior"};
  app.require_subcommand(1);
  Config cfg;
  cfg.random.seed = 0;

  auto* check = app.add_subcommand("check", "run the push-in procedure");
  auto* oracle = app.add_subcommand("oracle", "run the exhaustive integration check");
  for (auto* sub : {check, oracle}) {
    sub->add_option("--system", cfg.system_path, "system file")->required()->check(CLI::ExistingFile);
    sub->add_option("--bad", cfg.bad_path, "bad-behavior spec")->required()->check(CLI::ExistingFile);
    sub->add_option("--report", cfg.report_path, "write the JSON report here");
    sub->add_flag("-q,--quiet", cfg.quiet, "no table on stdout");
  }
  check->add_option("--order", cfg.order, "auto or comma-separated black-box names");
  check->add_option("--jobs", cfg.jobs, "query threads per job")->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "run a data-acquisition case");
  experiment->add_option("case", cfg.case_name, "case1..case4")->required();
  experiment->add_option("--maxlen", cfg.maxlen, "bad-behavior length bound");
  experiment->add_option("--variant", cfg.variant, "baseline or commFixed (default per case)");
  experiment->add_option("--jobs", cfg.jobs, "query threads per job")->check(CLI::PositiveNumber);
  experiment->add_option("--report", cfg.report_path, "write the JSON report here");
  experiment->add_flag("--long", cfg.allow_long, "allow maxlen above 10");
  experiment->add_flag("-q,--quiet", cfg.quiet, "no table on stdout");

  auto* gen = app.add_subcommand("gen-random", "write a random system with implementations");
  gen->add_option("--out", cfg.out_dir, "output directory")->required();
  gen->add_option("--seed", cfg.random.seed, "seed (default: $PUSHIN_SEED, else 1)");
  gen->add_option("--k", cfg.random.k, "number of black-boxes");
  gen->add_option("--states", cfg.random.max_states_per_unit, "max states per unit");
  gen->add_option("--actions", cfg.random.actions_per_unit, "max actions per unit");
  gen->add_option("--density", cfg.random.sharing_density, "probability of sharing with the previous box");
  gen->add_option("--maxlen", cfg.random.bad_max_len, "max bad-behavior length");
  gen->add_flag("-q,--quiet", cfg.quiet);

  auto* fmt = app.add_subcommand("fmt", "print a file in canonical form (.unit .nfa .sys or bad spec)");
  fmt->add_option("file", cfg.file)->required()->check(CLI::ExistingFile);
  fmt->add_option("--system", cfg.system_path, "system whose alphabet a bad spec uses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*experiment) return cmd_experiment(cfg);
    if (*gen) return cmd_gen_random(cfg);
    if (*fmt) return cmd_fmt(cfg);
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
