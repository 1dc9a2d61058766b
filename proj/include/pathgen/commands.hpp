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

// The `generate` and `benchmark` commands behind the pathgen tool.
//
// Exit codes:
//   0  success
//   1  I/O failure: model file unreadable or output not writable
//   2  invalid configuration: flag values, weights, harness parameters
//   3  invalid model: malformed document, failed validation, parallel edges
//   4  pipeline failure: enumeration cap exceeded, no usable candidate

#ifndef PATHGEN_COMMANDS_HPP_
#define PATHGEN_COMMANDS_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathgen/criteria.hpp"
#include "pathgen/error.hpp"
#include "pathgen/model.hpp"
#include "pathgen/random_model.hpp"
#include "pathgen/report.hpp"
#include "pathgen/requirements.hpp"
#include "pathgen/selection.hpp"

namespace pathgen {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitModel = 3,
  kExitPipeline = 4,
};

struct RunConfig {
  std::filesystem::path model_path;
  CoverageSpec coverage;
  OptimalitySpec optimality = SingleCriterion{Criterion::kTCount};
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  int instances = 50;
  std::size_t prime_path_cap = kDefaultPrimePathCap;
};

namespace internal {

inline std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    parts.emplace_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

inline double ParseWeight(const std::string& text) {
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad weight '" + text + "'");
  }
  return value;
}

}  // namespace internal

// "edge" | "edge-pair" | "tdl:<x>" | "prime-path", with "high" | "medium" | "none".
inline CoverageSpec ParseCoverage(std::string_view coverage, std::string_view pl) {
  PlSetting level;
  if (pl == "high") {
    level = PlSetting::kHigh;
  } else if (pl == "medium") {
    level = PlSetting::kMedium;
  } else if (pl == "none") {
    level = PlSetting::kNone;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown --pl '" + std::string(pl) + "'");
  }
  if (coverage == "edge") return CoverageSpec::Edge(level);
  if (coverage == "edge-pair") return CoverageSpec::EdgePair(level);
  if (coverage == "prime-path") return CoverageSpec::PrimePath(level);
  if (coverage.starts_with("tdl:")) {
    const std::string digits(coverage.substr(4));
    int x = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad tdl '" + digits + "'");
    }
    return CoverageSpec::Tdl(x, level);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown --coverage '" + std::string(coverage) + "'");
}

// "single:<name>" | "opt:<w1>,<w2>,<w3>" | "seq:<name>,<name>,...".
inline OptimalitySpec ParseSelect(std::string_view select) {
  auto criterion = [](const std::string& name) {
    auto c = ParseCriterion(name);
    if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown criterion '" + name + "'");
    return *c;
  };
  if (select.starts_with("single:")) {
    return SingleCriterion{criterion(std::string(select.substr(7)))};
  }
  if (select.starts_with("opt:")) {
    auto parts = internal::SplitOn(select.substr(4), ',');
    if (parts.size() != 3) {
      throw Error(ErrorCode::kInvalidArgument, "opt: needs three weights");
    }
    OptimalityWeights w{internal::ParseWeight(parts[0]), internal::ParseWeight(parts[1]),
                        internal::ParseWeight(parts[2])};
    CheckWeights(w);
    return WeightedFunction{w};
  }
  if (select.starts_with("seq:")) {
    CriteriaSequence seq;
    for (const std::string& name : internal::SplitOn(select.substr(4), ',')) {
      seq.criteria.push_back(criterion(name));
    }
    return seq;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown --select '" + std::string(select) + "'");
}

inline int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kUnknownNode:
    case ErrorCode::kMissingStart:
    case ErrorCode::kMissingEnds:
    case ErrorCode::kInvalidModel:
    case ErrorCode::kParallelEdgesPresent:
      return kExitModel;
    case ErrorCode::kInvalidCombination:
    case ErrorCode::kInvalidWeights:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kInfeasibleParams:
    case ErrorCode::kInvalidArgument:
      return kExitConfig;
    case ErrorCode::kResourceLimitExceeded:
    case ErrorCode::kInvalidTestSet:
    case ErrorCode::kEmptyTestSet:
    case ErrorCode::kNoValidCandidate:
      return kExitPipeline;
  }
  return kExitPipeline;
}

inline bool WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

// One test case per line, node ids joined by "->".
inline std::string FormatTestPaths(const SutModel& model, const TestSet& ts) {
  const Digraph g(model);
  std::string text;
  for (const Path& p : ts.paths) text += FormatPath(g, p) + "\n";
  return text;
}

// Reads the model, runs the pipeline and writes report.csv and
// selected_paths.txt into cfg.out_dir.
inline int RunGenerateCommand(const RunConfig& cfg, std::ostream& log) {
  std::ifstream in(cfg.model_path, std::ios::binary);
  if (!in) {
    log << "error: cannot read model file " << cfg.model_path << "\n";
    return kExitIo;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  SutModel model;
  ComparisonReport report;
  try {
    model = ParseModel(buffer.str());
    report = RunPipeline(model, cfg.coverage, cfg.optimality,
                         PipelineOptions{cfg.prime_path_cap, true});
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  const CandidateResult& winner = report.candidates[report.selected];
  if (ec || !WriteFile(cfg.out_dir / "report.csv", WriteCsv(report)) ||
      !WriteFile(cfg.out_dir / "selected_paths.txt",
                 FormatTestPaths(model, *winner.test_set))) {
    log << "error: cannot write outputs to " << cfg.out_dir << "\n";
    return kExitIo;
  }

  log << "model " << report.model_name << ", coverage " << CoverageName(cfg.coverage)
      << " pl=" << PlName(cfg.coverage.pl) << ", select "
      << OptimalityName(cfg.optimality) << "\n";
  for (const CandidateResult& c : report.candidates) {
    log << "  " << RunLabel(c.run) << ": ";
    if (c.ok()) {
      log << c.criteria->t_count << " paths, " << c.criteria->edges_total << " edges";
    } else {
      log << "failed (" << c.failure << ")";
    }
    log << "\n";
  }
  log << "winners:";
  for (std::size_t i : report.winners) log << " " << RunLabel(report.candidates[i].run);
  log << "\nselected: " << RunLabel(winner.run) << "\n";
  return kExitOk;
}

// Shape of the random instances used by the benchmark, spanning sizes of
// typical business-process models (9-52 nodes, 1.1-1.55 edges per node).
inline RandomModelParams DrawBenchmarkParams(std::mt19937_64& rng) {
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto integer = [&rng](int lo, int hi) {
    return lo + static_cast<int>(internal::UniformBelow(rng, hi - lo + 1));
  };
  RandomModelParams p;
  p.node_count = integer(9, 52);
  p.edge_factor = uniform(1.1, 1.55);
  p.high_ratio = uniform(0.08, 0.4);
  p.medium_ratio = uniform(0.05, 0.3);
  p.loop_count = integer(0, std::min(11, p.node_count / 4));
  p.end_count = integer(1, 3);
  return p;
}

// Runs the pipeline on cfg.instances seeded random models and writes
// instances.csv (every report), averages.csv (criteria x algorithm columns)
// and the generated models under models/.
inline int RunBenchmarkCommand(const RunConfig& cfg, std::ostream& log) {
  if (cfg.instances < 1) {
    log << "error: --instances must be positive\n";
    return kExitConfig;
  }
  const std::vector<AlgorithmRun> roster = SelectAlgorithms(cfg.coverage);
  std::mt19937_64 rng(cfg.seed);
  std::string instances_csv = std::string(kCsvHeader) + "\n";
  std::map<AlgorithmRun, std::vector<CriteriaVector>> by_run;
  std::vector<std::pair<std::string, std::string>> models;
  int failed_instances = 0;

  const int width = static_cast<int>(std::to_string(cfg.instances).size());
  for (int i = 0; i < cfg.instances; ++i) {
    const RandomModelParams params = DrawBenchmarkParams(rng);
    const std::uint64_t model_seed = rng();
    std::string digits = std::to_string(i + 1);
    const std::string name = "instance-" + std::string(width - digits.size(), '0') + digits;
    try {
      SutModel model = GenerateRandomModel(params, model_seed);
      model.name = name;
      models.emplace_back(name, SerializeModel(model));
      ComparisonReport report = RunPipeline(model, cfg.coverage, cfg.optimality,
                                            PipelineOptions{cfg.prime_path_cap, true});
      instances_csv += WriteCsvRows(report);
      for (const CandidateResult& c : report.candidates) {
        if (c.ok()) by_run[c.run].push_back(*c.criteria);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInfeasibleParams) {
        log << "error: " << e.what() << "\n";
        return kExitConfig;
      }
      ++failed_instances;
      log << name << ": " << e.what() << "\n";
    }
  }

  std::string averages = "criterion";
  for (const AlgorithmRun& run : roster) averages += "," + RunLabel(run);
  averages += "\n";
  for (Criterion c : kAllCriteria) {
    averages += std::string(CriterionName(c));
    for (const AlgorithmRun& run : roster) {
      averages += ",";
      const auto it = by_run.find(run);
      if (it == by_run.end() || it->second.empty()) continue;
      double sum = 0;
      for (const CriteriaVector& v : it->second) sum += v.Value(c);
      averages += FormatFixed(sum / static_cast<double>(it->second.size()));
    }
    averages += "\n";
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir / "models", ec);
  bool ok = !ec && WriteFile(cfg.out_dir / "instances.csv", instances_csv) &&
            WriteFile(cfg.out_dir / "averages.csv", averages);
  for (const auto& [name, text] : models) {
    ok = ok && WriteFile(cfg.out_dir / "models" / (name + ".json"), text);
  }
  if (!ok) {
    log << "error: cannot write outputs to " << cfg.out_dir << "\n";
    return kExitIo;
  }
  log << cfg.instances << " instances, " << failed_instances << " failed; averages in "
      << (cfg.out_dir / "averages.csv").string() << "\n";
  return failed_instances == cfg.instances ? kExitPipeline : kExitOk;
}

}  // namespace pathgen

#endif  // PATHGEN_COMMANDS_HPP_
