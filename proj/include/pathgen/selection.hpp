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

// The end-to-end process: pick the algorithms suited to a coverage spec, run
// them, score every resulting test set and select the best one by a single
// criterion, a weighted optimality function or a sequence of criteria.

#ifndef PATHGEN_SELECTION_HPP_
#define PATHGEN_SELECTION_HPP_

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pathgen/criteria.hpp"
#include "pathgen/error.hpp"
#include "pathgen/generators.hpp"
#include "pathgen/graph.hpp"
#include "pathgen/model.hpp"
#include "pathgen/requirements.hpp"

namespace pathgen {

struct AlgorithmRun {
  AlgorithmId algorithm;
  Conversion conversion;

  // Canonical order: algorithm first, then atomic before sequence.
  friend auto operator<=>(const AlgorithmRun&, const AlgorithmRun&) = default;
};

// Short label used as a report column, e.g. "BF-a", "SC-s", "PPT".
inline std::string RunLabel(const AlgorithmRun& run) {
  std::string label(AlgorithmName(run.algorithm));
  if (run.conversion == Conversion::kAtomic) label += "-a";
  if (run.conversion == Conversion::kSequence) label += "-s";
  return label;
}

// The algorithm roster for each coverage configuration. Edge coverage reduced
// by a priority level runs BF, SC and PG with both conversions next to PPT and
// RSC; unreduced coverage falls back to PCT and the requirement-driven
// generators; TDL > 2 and prime paths reduced by a priority level each have a
// single suitable algorithm.
inline std::vector<AlgorithmRun> SelectAlgorithms(const CoverageSpec& cov) {
  using A = AlgorithmId;
  constexpr Conversion kNa = Conversion::kNotApplicable;
  const bool reduced = cov.pl != PlSetting::kNone;
  switch (cov.intensity) {
    case Intensity::kEdge:
      if (!reduced) return {{A::kPct, kNa}};
      return {{A::kPpt, kNa},
              {A::kRsc, kNa},
              {A::kBf, Conversion::kAtomic},
              {A::kBf, Conversion::kSequence},
              {A::kSc, Conversion::kAtomic},
              {A::kSc, Conversion::kSequence},
              {A::kPg, Conversion::kAtomic},
              {A::kPg, Conversion::kSequence}};
    case Intensity::kEdgePair:
      if (reduced) return {{A::kPpt, kNa}, {A::kRsc, kNa}};
      return {{A::kBf, kNa}, {A::kSc, kNa}, {A::kPg, kNa}, {A::kPct, kNa}};
    case Intensity::kTdl:
      if (reduced) return {{A::kPpt, kNa}};
      return {{A::kBf, kNa}, {A::kSc, kNa}, {A::kPg, kNa}, {A::kPct, kNa}};
    case Intensity::kPrimePath:
      if (reduced) return {{A::kRsc, kNa}};
      return {{A::kBf, kNa}, {A::kSc, kNa}, {A::kPg, kNa}};
  }
  return {};
}

struct OptimalityWeights {
  double tcount = 0.3;
  double edges = 0.4;
  double uedges = 0.3;
};

struct SingleCriterion {
  Criterion criterion;
};
struct WeightedFunction {
  OptimalityWeights weights;
};
struct CriteriaSequence {
  std::vector<Criterion> criteria;
};
using OptimalitySpec = std::variant<SingleCriterion, WeightedFunction, CriteriaSequence>;

inline std::string OptimalityName(const OptimalitySpec& spec) {
  if (auto* s = std::get_if<SingleCriterion>(&spec)) {
    return "single:" + std::string(CriterionName(s->criterion));
  }
  if (auto* f = std::get_if<WeightedFunction>(&spec)) {
    auto fmt = [](double w) {
      std::string s = std::to_string(w);
      s.erase(s.find_last_not_of('0') + 1);
      if (s.back() == '.') s.pop_back();
      return s;
    };
    return "opt:" + fmt(f->weights.tcount) + "," + fmt(f->weights.edges) + "," +
           fmt(f->weights.uedges);
  }
  std::string name = "seq:";
  const auto& seq = std::get<CriteriaSequence>(spec).criteria;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) name += ",";
    name += CriterionName(seq[i]);
  }
  return name;
}

// All candidates holding the best value of `criterion`: the lowest for counts
// and er, the highest for the four priority ratios.
inline std::vector<std::size_t> SelectSingle(Criterion criterion,
                                             std::span<const CriteriaVector> candidates) {
  if (candidates.empty()) throw Error(ErrorCode::kEmptyInput, "no candidates");
  double best = candidates[0].Value(criterion);
  for (const CriteriaVector& c : candidates) {
    const double v = c.Value(criterion);
    best = IsMaximized(criterion) ? std::max(best, v) : std::min(best, v);
  }
  std::vector<std::size_t> winners;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].Value(criterion) == best) winners.push_back(i);
  }
  return winners;
}

inline void CheckWeights(const OptimalityWeights& w) {
  for (double x : {w.tcount, w.edges, w.uedges}) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kInvalidWeights, "each weight must lie in [0, 1]");
    }
  }
  if (std::abs(w.tcount + w.edges + w.uedges - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidWeights, "weights must sum to 1");
  }
}

struct OptimalityResult {
  std::vector<double> scores;
  std::vector<std::size_t> winners;
};

// o(T_x) = w_t (1 - |T_x| / mean |T|) + w_e (1 - edges(T_x) / mean edges)
//        + w_u (1 - uedges(T_x) / mean uedges), means over `candidates`.
// The highest score wins. Means come from exact integer sums, so a
// candidate's score does not depend on the order of the list.
inline OptimalityResult OptimalityFunction(const OptimalityWeights& w,
                                           std::span<const CriteriaVector> candidates) {
  CheckWeights(w);
  if (candidates.empty()) throw Error(ErrorCode::kEmptyInput, "no candidates");
  std::int64_t sum_t = 0;
  std::int64_t sum_e = 0;
  std::int64_t sum_u = 0;
  for (const CriteriaVector& c : candidates) {
    sum_t += c.t_count;
    sum_e += c.edges_total;
    sum_u += c.uedges;
  }
  const double m = static_cast<double>(candidates.size());
  auto term = [m](std::int64_t value, std::int64_t sum) {
    return 1.0 - static_cast<double>(value) / (static_cast<double>(sum) / m);
  };
  OptimalityResult result;
  for (const CriteriaVector& c : candidates) {
    result.scores.push_back(w.tcount * term(c.t_count, sum_t) +
                            w.edges * term(c.edges_total, sum_e) +
                            w.uedges * term(c.uedges, sum_u));
  }
  const double best = *std::max_element(result.scores.begin(), result.scores.end());
  for (std::size_t i = 0; i < result.scores.size(); ++i) {
    if (result.scores[i] == best) result.winners.push_back(i);
  }
  return result;
}

// Narrows the candidates by each criterion in turn, keeping ties for the next.
inline std::vector<std::size_t> SequenceSelect(std::span<const Criterion> criteria,
                                               std::span<const CriteriaVector> candidates) {
  if (criteria.empty()) throw Error(ErrorCode::kEmptyInput, "no criteria");
  if (candidates.empty()) throw Error(ErrorCode::kEmptyInput, "no candidates");
  std::vector<std::size_t> survivors(candidates.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) survivors[i] = i;
  for (Criterion c : criteria) {
    std::vector<CriteriaVector> subset;
    for (std::size_t i : survivors) subset.push_back(candidates[i]);
    std::vector<std::size_t> next;
    for (std::size_t j : SelectSingle(c, subset)) next.push_back(survivors[j]);
    survivors = std::move(next);
  }
  return survivors;
}

struct CandidateResult {
  AlgorithmRun run;
  std::optional<TestSet> test_set;
  std::optional<CriteriaVector> criteria;
  std::optional<double> opt_score;
  CoverageVerdict verdict;
  // Empty for a usable candidate; otherwise why it failed.
  std::string failure;

  bool ok() const { return failure.empty(); }
};

struct ComparisonReport {
  std::string model_name;
  CoverageSpec coverage;
  OptimalitySpec optimality;
  std::vector<CandidateResult> candidates;
  // Indices into `candidates`, in canonical order.
  std::vector<std::size_t> winners;
  std::size_t selected = 0;
};

struct PipelineOptions {
  std::size_t prime_path_cap = kDefaultPrimePathCap;
  // Run the generators on separate threads; results are merged in canonical
  // order either way.
  bool parallel = true;
};

namespace internal {

inline int GeneratorDepth(const CoverageSpec& cov) {
  return cov.intensity == Intensity::kPrimePath ? 1 : cov.depth();
}

inline TestSet RunGenerator(const AlgorithmRun& run, const ModelGraph& graph, const PlainGraph& plain,
                            const CoverageSpec& cov, const RequirementSet* requirements,
                            std::size_t prime_path_cap) {
  const auto level = ToPriorityLevel(cov.pl);
  switch (run.algorithm) {
    case AlgorithmId::kPpt:
      return PptGenerate(graph, GeneratorDepth(cov), *level);
    case AlgorithmId::kRsc:
      return RscGenerate(graph, plain, *level, prime_path_cap);
    case AlgorithmId::kPct:
      return PctGenerate(graph, GeneratorDepth(cov));
    case AlgorithmId::kBf:
      return BfGenerate(plain, *requirements);
    case AlgorithmId::kSc:
      return ScGenerate(plain, *requirements);
    case AlgorithmId::kPg:
      return PgGenerate(plain, *requirements);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace internal

inline ComparisonReport RunPipeline(const SutModel& model, const CoverageSpec& cov,
                                    const OptimalitySpec& opt,
                                    const PipelineOptions& options = {}) {
  if (auto* f = std::get_if<WeightedFunction>(&opt)) CheckWeights(f->weights);
  if (auto* s = std::get_if<CriteriaSequence>(&opt); s && s->criteria.empty()) {
    throw Error(ErrorCode::kEmptyInput, "empty criteria sequence");
  }
  const ValidationReport validation = ValidateModel(model);
  if (!validation.ok) {
    std::string why;
    for (const ValidationIssue& issue : validation.issues) {
      if (issue.severity != Severity::kError) continue;
      why += " " + issue.code;
      for (const std::string& id : issue.ids) why += " " + id;
      why += ";";
    }
    throw Error(ErrorCode::kInvalidModel, "model '" + model.name + "':" + why);
  }

  // Step 1: plain graph and requirement sets.
  const PlainGraph plain = ToPlainGraph(model);
  const ModelGraph graph(model);
  const std::vector<AlgorithmRun> roster = SelectAlgorithms(cov);
  RequirementOptions req_options{options.prime_path_cap};
  std::map<Conversion, RequirementSet> requirements;
  std::map<Conversion, Error> requirement_errors;
  for (const AlgorithmRun& run : roster) {
    const bool needs = run.algorithm == AlgorithmId::kBf ||
                       run.algorithm == AlgorithmId::kSc ||
                       run.algorithm == AlgorithmId::kPg;
    if (!needs || requirements.contains(run.conversion) ||
        requirement_errors.contains(run.conversion)) {
      continue;
    }
    try {
      requirements.emplace(run.conversion,
                           BuildRequirements(model, cov, run.conversion, req_options));
    } catch (const Error& e) {
      requirement_errors.emplace(run.conversion, e);
    }
  }

  // Steps 2-4: run every generator, score and verify its test set.
  auto evaluate = [&](const AlgorithmRun& run) {
    CandidateResult c;
    c.run = run;
    try {
      const RequirementSet* r = nullptr;
      if (auto it = requirement_errors.find(run.conversion);
          it != requirement_errors.end() && run.algorithm != AlgorithmId::kPpt &&
          run.algorithm != AlgorithmId::kRsc && run.algorithm != AlgorithmId::kPct) {
        throw it->second;
      }
      if (auto it = requirements.find(run.conversion); it != requirements.end()) {
        r = &it->second;
      }
      c.test_set = internal::RunGenerator(run, graph, plain, cov, r,
                                          options.prime_path_cap);
      c.criteria = ComputeCriteria(graph, *c.test_set);
      const Obligations o =
          BuildObligations(graph, cov, run.algorithm, run.conversion,
                           options.prime_path_cap, &plain);
      c.verdict = CheckObligations(graph.graph(), *c.test_set, o);
      if (!c.verdict.satisfied) c.failure = "coverage obligations not met";
    } catch (const Error& e) {
      c.failure = e.what();
      c.criteria.reset();
    }
    return c;
  };

  ComparisonReport report;
  report.model_name = model.name;
  report.coverage = cov;
  report.optimality = opt;
  if (options.parallel && roster.size() > 1) {
    std::vector<std::future<CandidateResult>> futures;
    for (const AlgorithmRun& run : roster) {
      futures.push_back(std::async(std::launch::async, evaluate, run));
    }
    for (auto& f : futures) report.candidates.push_back(f.get());
  } else {
    for (const AlgorithmRun& run : roster) report.candidates.push_back(evaluate(run));
  }

  // Step 5: selection over the usable candidates.
  std::vector<std::size_t> usable;
  std::vector<CriteriaVector> vectors;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].ok()) {
      usable.push_back(i);
      vectors.push_back(*report.candidates[i].criteria);
    }
  }
  if (usable.empty()) {
    std::string why;
    for (const CandidateResult& c : report.candidates) {
      why += " [" + RunLabel(c.run) + ": " + c.failure + "]";
    }
    throw Error(ErrorCode::kNoValidCandidate, "every algorithm failed:" + why);
  }
  std::vector<std::size_t> local;
  if (auto* s = std::get_if<SingleCriterion>(&opt)) {
    local = SelectSingle(s->criterion, vectors);
  } else if (auto* f = std::get_if<WeightedFunction>(&opt)) {
    OptimalityResult r = OptimalityFunction(f->weights, vectors);
    for (std::size_t j = 0; j < usable.size(); ++j) {
      report.candidates[usable[j]].opt_score = r.scores[j];
    }
    local = std::move(r.winners);
  } else {
    local = SequenceSelect(std::get<CriteriaSequence>(opt).criteria, vectors);
  }
  for (std::size_t j : local) report.winners.push_back(usable[j]);
  report.selected = report.winners.front();
  return report;
}

}  // namespace pathgen

#endif  // PATHGEN_SELECTION_HPP_
