// Copyright 2026 The Pathgen Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: see `pathgen --help`.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pathgen/pathgen.hpp"

namespace {

std::size_t PrimeCapFromEnv() {
  const char* value = std::getenv("PATHGEN_PRIME_CAP");
  if (value == nullptr || *value == '\0') return pathgen::kDefaultPrimePathCap;
  return static_cast<std::size_t>(std::stoull(value));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generates path-based test sets with several algorithms and "
               "selects the optimal one."};
  app.require_subcommand(1);

  std::string model_path;
  std::string coverage = "edge";
  std::string pl = "high";
  std::string select = "single:tcount";
  std::string out_dir = ".";
  int instances = 50;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--coverage", coverage,
                    "edge | edge-pair | tdl:<x> | prime-path")
        ->capture_default_str();
    cmd->add_option("--pl", pl, "high | medium | none")->capture_default_str();
    cmd->add_option("--select", select,
                    "single:<criterion> | opt:<w1>,<w2>,<w3> | seq:<c1>,<c2>,...")
        ->capture_default_str();
    cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  };

  CLI::App* generate = app.add_subcommand("generate", "run all suitable algorithms on one model");
  generate->add_option("--model", model_path, "model JSON file")->required();
  add_common(generate);

  CLI::App* benchmark =
      app.add_subcommand("benchmark", "run the pipeline over seeded random models");
  benchmark->add_option("--instances", instances, "number of random models")
      ->capture_default_str();
  benchmark->add_option("--seed", seed, "random seed")->capture_default_str();
  add_common(benchmark);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? pathgen::kExitOk : pathgen::kExitConfig;
  }

  pathgen::RunConfig cfg;
  try {
    cfg.coverage = pathgen::ParseCoverage(coverage, pl);
    cfg.optimality = pathgen::ParseSelect(select);
    cfg.prime_path_cap = PrimeCapFromEnv();
  } catch (const pathgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pathgen::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: PATHGEN_PRIME_CAP: " << e.what() << "\n";
    return pathgen::kExitConfig;
  }
  cfg.model_path = model_path;
  cfg.out_dir = out_dir;
  cfg.instances = instances;
  cfg.seed = seed;

  if (generate->parsed()) return pathgen::RunGenerateCommand(cfg, std::cout);
  return pathgen::RunBenchmarkCommand(cfg, std::cout);
}
