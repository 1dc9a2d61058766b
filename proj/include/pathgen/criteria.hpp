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

#ifndef PATHGEN_CRITERIA_HPP_
#define PATHGEN_CRITERIA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pathgen/error.hpp"
#include "pathgen/generators.hpp"
#include "pathgen/graph.hpp"
#include "pathgen/requirements.hpp"

namespace pathgen {

// The fourteen test set optimality criteria, in report order.
enum class Criterion {
  kTCount,
  kEdges,
  kEdgesHigh,
  kEdgesMedium,
  kUniqueEdges,
  kUniqueEdgesHigh,
  kUniqueEdgesMedium,
  kNodes,
  kUniqueNodes,
  kEdgeRatio,
  kHighRatio,
  kMediumRatio,
  kUniqueHighRatio,
  kUniqueMediumRatio,
};

inline constexpr std::size_t kCriterionCount = 14;

inline constexpr std::array<Criterion, kCriterionCount> kAllCriteria = {
    Criterion::kTCount,          Criterion::kEdges,
    Criterion::kEdgesHigh,       Criterion::kEdgesMedium,
    Criterion::kUniqueEdges,     Criterion::kUniqueEdgesHigh,
    Criterion::kUniqueEdgesMedium, Criterion::kNodes,
    Criterion::kUniqueNodes,     Criterion::kEdgeRatio,
    Criterion::kHighRatio,       Criterion::kMediumRatio,
    Criterion::kUniqueHighRatio, Criterion::kUniqueMediumRatio};

inline std::string_view CriterionName(Criterion c) {
  static constexpr std::array<std::string_view, kCriterionCount> kNames = {
      "tcount", "edges",  "edges_h", "edges_m", "uedges", "uedges_h", "uedges_m",
      "nodes",  "unodes", "er",      "e_h",     "e_m",    "ue_h",     "ue_m"};
  return kNames[static_cast<std::size_t>(c)];
}

inline std::optional<Criterion> ParseCriterion(std::string_view name) {
  for (Criterion c : kAllCriteria) {
    if (CriterionName(c) == name) return c;
  }
  return std::nullopt;
}

// Counts and ratios are minimized; the four priority ratios are maximized.
inline bool IsMaximized(Criterion c) {
  return c == Criterion::kHighRatio || c == Criterion::kMediumRatio ||
         c == Criterion::kUniqueHighRatio || c == Criterion::kUniqueMediumRatio;
}

struct CriteriaVector {
  std::int64_t t_count = 0;
  std::int64_t edges_total = 0;
  std::int64_t edges_high = 0;
  std::int64_t edges_med = 0;  // high and medium together
  std::int64_t uedges = 0;
  std::int64_t uedges_high = 0;
  std::int64_t uedges_med = 0;  // high and medium together
  std::int64_t nodes_total = 0;
  std::int64_t unodes = 0;
  double er = 0;
  double e_h = 0;
  double e_m = 0;
  double ue_h = 0;
  double ue_m = 0;

  double Value(Criterion c) const {
    switch (c) {
      case Criterion::kTCount: return static_cast<double>(t_count);
      case Criterion::kEdges: return static_cast<double>(edges_total);
      case Criterion::kEdgesHigh: return static_cast<double>(edges_high);
      case Criterion::kEdgesMedium: return static_cast<double>(edges_med);
      case Criterion::kUniqueEdges: return static_cast<double>(uedges);
      case Criterion::kUniqueEdgesHigh: return static_cast<double>(uedges_high);
      case Criterion::kUniqueEdgesMedium: return static_cast<double>(uedges_med);
      case Criterion::kNodes: return static_cast<double>(nodes_total);
      case Criterion::kUniqueNodes: return static_cast<double>(unodes);
      case Criterion::kEdgeRatio: return er;
      case Criterion::kHighRatio: return e_h;
      case Criterion::kMediumRatio: return e_m;
      case Criterion::kUniqueHighRatio: return ue_h;
      case Criterion::kUniqueMediumRatio: return ue_m;
    }
    return 0;
  }

  friend bool operator==(const CriteriaVector&, const CriteriaVector&) = default;
};

// Ratios are fractions in [0, 1]. ue_h and ue_m divide by edges(T), the
// total with repetition, not by the unique edge count.
inline CriteriaVector ComputeCriteria(const ModelGraph& model, const TestSet& ts) {
  if (ts.paths.empty()) throw Error(ErrorCode::kEmptyTestSet, "no test paths");
  const Digraph& g = model.graph();
  CriteriaVector v;
  v.t_count = static_cast<std::int64_t>(ts.paths.size());
  std::vector<bool> edge_seen(g.edge_count(), false);
  std::vector<bool> node_seen(g.node_count(), false);
  for (const Path& p : ts.paths) {
    v.nodes_total += static_cast<std::int64_t>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!node_seen[p[i]]) {
        node_seen[p[i]] = true;
        ++v.unodes;
      }
      if (i == 0) continue;
      auto e = g.FindEdge(p[i - 1], p[i]);
      if (!e) {
        throw Error(ErrorCode::kInvalidTestSet,
                    "no edge " + g.node_id(p[i - 1]) + "->" + g.node_id(p[i]));
      }
      const Priority pr = model.priority(*e);
      const bool high = pr == Priority::kHigh;
      const bool med = high || pr == Priority::kMedium;
      ++v.edges_total;
      v.edges_high += high;
      v.edges_med += med;
      if (!edge_seen[*e]) {
        edge_seen[*e] = true;
        ++v.uedges;
        v.uedges_high += high;
        v.uedges_med += med;
      }
    }
  }
  if (v.edges_total == 0) throw Error(ErrorCode::kEmptyTestSet, "no edges in test set");
  const double total = static_cast<double>(v.edges_total);
  v.er = static_cast<double>(v.uedges) / static_cast<double>(g.edge_count());
  v.e_h = static_cast<double>(v.edges_high) / total;
  v.e_m = static_cast<double>(v.edges_med) / total;
  v.ue_h = static_cast<double>(v.uedges_high) / total;
  v.ue_m = static_cast<double>(v.uedges_med) / total;
  return v;
}

struct CoverageVerdict {
  bool satisfied = true;
  std::vector<Path> missing_paths;
  std::vector<EdgeId> missing_edges;
};

// What a test set must contain to satisfy a coverage spec.
struct Obligations {
  std::vector<EdgeIndex> edges;
  std::vector<Path> paths;
};

// Obligations for a coverage spec, refined by the algorithm and conversion
// that produced the test set:
//   - unreduced coverage: every edge, every walk of the requested depth, or
//     every prime path;
//   - reduced edge coverage: the priority edges, plus the atomic or sequence
//     requirement set for the requirement-driven generators;
//   - RSC: the priority edges at any intensity;
//   - PPT at depth >= 2: the priority-restricted walks it is built from.
inline Obligations BuildObligations(const ModelGraph& model, const CoverageSpec& cov,
                                    std::optional<AlgorithmId> algorithm,
                                    Conversion conversion,
                                    std::size_t prime_path_cap = kDefaultPrimePathCap,
                                    const PlainGraph* plain = nullptr) {
  Obligations o;
  const Digraph& g = model.graph();
  const auto level = ToPriorityLevel(cov.pl);
  if (!level) {
    switch (cov.intensity) {
      case Intensity::kEdge:
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) o.edges.push_back(e);
        break;
      case Intensity::kEdgePair:
      case Intensity::kTdl:
        o.paths = AllWalks(g, cov.depth());
        break;
      case Intensity::kPrimePath:
        if (!plain) {
          throw Error(ErrorCode::kInvalidArgument,
                      "prime path obligations need the plain graph");
        }
        o.paths = PrimePaths(*plain, prime_path_cap).paths;
        break;
    }
    return o;
  }

  o.edges = model.SelectedEdges(*level);
  if (algorithm == AlgorithmId::kRsc) return o;
  if (cov.intensity == Intensity::kEdge) {
    if (conversion == Conversion::kAtomic) {
      o.paths = AtomicRequirements(model, *level).paths;
    } else if (conversion == Conversion::kSequence) {
      o.paths = SequenceRequirements(model, *level).paths;
    }
    return o;
  }
  if (algorithm == AlgorithmId::kPpt && cov.intensity != Intensity::kPrimePath) {
    o.paths = PrioritizedWalks(model, cov.depth(), *level);
  }
  return o;
}

inline CoverageVerdict CheckObligations(const Digraph& g, const TestSet& ts,
                                        const Obligations& o) {
  CoverageVerdict verdict;
  std::vector<bool> present(g.edge_count(), false);
  for (const Path& p : ts.paths) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      // Any parallel edge between the two nodes counts as traversed.
      for (EdgeIndex e : g.out_edges(p[i - 1])) {
        if (g.edge(e).target == p[i]) present[e] = true;
      }
    }
  }
  for (EdgeIndex e : o.edges) {
    if (!present[e]) verdict.missing_edges.push_back(g.edge(e).id);
  }
  if (!o.paths.empty()) {
    RequirementIndex index(o.paths);
    std::vector<bool> hit(o.paths.size(), false);
    for (const Path& p : ts.paths) {
      for (std::uint32_t r : index.CoveredBy(p)) hit[r] = true;
    }
    for (std::size_t r = 0; r < o.paths.size(); ++r) {
      if (!hit[r]) verdict.missing_paths.push_back(o.paths[r]);
    }
  }
  std::sort(verdict.missing_edges.begin(), verdict.missing_edges.end());
  verdict.satisfied = verdict.missing_edges.empty() && verdict.missing_paths.empty();
  return verdict;
}

// Checks `ts` against the obligations of `cov`. The test set's algorithm and
// conversion select the refined obligations described at BuildObligations.
inline CoverageVerdict VerifyCoverage(const SutModel& model, const TestSet& ts,
                                      const CoverageSpec& cov,
                                      std::size_t prime_path_cap = kDefaultPrimePathCap) {
  ModelGraph graph(model);
  std::optional<PlainGraph> plain;
  if (cov.intensity == Intensity::kPrimePath && cov.pl == PlSetting::kNone) {
    plain.emplace(ToPlainGraph(model));
  }
  const Obligations o = BuildObligations(graph, cov, ts.algorithm, ts.conversion,
                                         prime_path_cap, plain ? &*plain : nullptr);
  return CheckObligations(graph.graph(), ts, o);
}

}  // namespace pathgen

#endif  // PATHGEN_CRITERIA_HPP_
