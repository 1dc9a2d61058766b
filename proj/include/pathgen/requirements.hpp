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

// Test requirements: node paths that must each appear as a contiguous
// sub-path of some test case. All sets are duplicate-free and sorted.

#ifndef PATHGEN_REQUIREMENTS_HPP_
#define PATHGEN_REQUIREMENTS_HPP_

#include <cstddef>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "pathgen/error.hpp"
#include "pathgen/graph.hpp"
#include "pathgen/model.hpp"

namespace pathgen {

inline constexpr std::size_t kDefaultPrimePathCap = 100000;

enum class Intensity { kEdge, kEdgePair, kTdl, kPrimePath };

// Priority level of a coverage spec; kNone means coverage is not reduced.
enum class PlSetting { kHigh, kMedium, kNone };

inline std::optional<PriorityLevel> ToPriorityLevel(PlSetting pl) {
  switch (pl) {
    case PlSetting::kHigh: return PriorityLevel::kHigh;
    case PlSetting::kMedium: return PriorityLevel::kMedium;
    case PlSetting::kNone: return std::nullopt;
  }
  return std::nullopt;
}

struct CoverageSpec {
  Intensity intensity = Intensity::kEdge;
  // Walk length for Intensity::kTdl; must exceed 2.
  int tdl = 0;
  PlSetting pl = PlSetting::kNone;

  static CoverageSpec Edge(PlSetting pl) { return {Intensity::kEdge, 1, pl}; }
  static CoverageSpec EdgePair(PlSetting pl) { return {Intensity::kEdgePair, 2, pl}; }
  static CoverageSpec Tdl(int x, PlSetting pl) {
    if (x <= 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tdl must exceed 2 (1 is edge, 2 is edge-pair coverage)");
    }
    return {Intensity::kTdl, x, pl};
  }
  static CoverageSpec PrimePath(PlSetting pl) { return {Intensity::kPrimePath, 0, pl}; }

  // Walk length in edges: 1 for edge, 2 for edge-pair, x for tdl, 0 for prime.
  int depth() const {
    switch (intensity) {
      case Intensity::kEdge: return 1;
      case Intensity::kEdgePair: return 2;
      case Intensity::kTdl: return tdl;
      case Intensity::kPrimePath: return 0;
    }
    return 0;
  }

  friend bool operator==(const CoverageSpec&, const CoverageSpec&) = default;
};

inline std::string CoverageName(const CoverageSpec& cov) {
  switch (cov.intensity) {
    case Intensity::kEdge: return "edge";
    case Intensity::kEdgePair: return "edge-pair";
    case Intensity::kTdl: return "tdl:" + std::to_string(cov.tdl);
    case Intensity::kPrimePath: return "prime-path";
  }
  return "edge";
}

inline std::string_view PlName(PlSetting pl) {
  switch (pl) {
    case PlSetting::kHigh: return "high";
    case PlSetting::kMedium: return "medium";
    case PlSetting::kNone: return "none";
  }
  return "none";
}

enum class Conversion { kAtomic, kSequence, kNotApplicable };

inline std::string_view ConversionName(Conversion c) {
  switch (c) {
    case Conversion::kAtomic: return "atomic";
    case Conversion::kSequence: return "sequence";
    case Conversion::kNotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

struct RequirementSet {
  CoverageSpec coverage;
  Conversion conversion = Conversion::kNotApplicable;
  std::vector<Path> paths;
};

// One two-node path per selected edge.
inline RequirementSet AtomicRequirements(const ModelGraph& model,
                                         PriorityLevel level) {
  RequirementSet r;
  r.coverage = CoverageSpec::Edge(level == PriorityLevel::kHigh ? PlSetting::kHigh
                                                                : PlSetting::kMedium);
  r.conversion = Conversion::kAtomic;
  const Digraph& g = model.graph();
  for (EdgeIndex e : model.SelectedEdges(level)) {
    r.paths.push_back({g.edge(e).source, g.edge(e).target});
  }
  SortUnique(r.paths);
  return r;
}

// Chain decomposition of the subgraph formed by the selected edges. A chain
// runs through nodes whose in- and out-degree inside the subgraph are both 1
// and stops at any other node. Cycles made only of such nodes are opened at
// their smallest edge id. Every selected edge lands in exactly one chain.
inline RequirementSet SequenceRequirements(const ModelGraph& model,
                                           PriorityLevel level) {
  RequirementSet r;
  r.coverage = CoverageSpec::Edge(level == PriorityLevel::kHigh ? PlSetting::kHigh
                                                                : PlSetting::kMedium);
  r.conversion = Conversion::kSequence;
  const Digraph& g = model.graph();

  std::vector<int> indeg(g.node_count(), 0);
  std::vector<int> outdeg(g.node_count(), 0);
  std::vector<EdgeIndex> next_edge(g.node_count(), 0);
  const std::vector<EdgeIndex> selected = model.SelectedEdges(level);
  for (EdgeIndex e : selected) {
    ++outdeg[g.edge(e).source];
    ++indeg[g.edge(e).target];
    next_edge[g.edge(e).source] = e;
  }
  auto internal_node = [&](NodeIndex n) { return indeg[n] == 1 && outdeg[n] == 1; };

  std::vector<bool> used(g.edge_count(), false);
  auto chain_from = [&](EdgeIndex first) {
    Path path{g.edge(first).source};
    EdgeIndex e = first;
    while (true) {
      used[e] = true;
      NodeIndex head = g.edge(e).target;
      path.push_back(head);
      if (!internal_node(head)) break;
      e = next_edge[head];
      if (used[e]) break;
    }
    r.paths.push_back(std::move(path));
  };

  // `selected` is in edge id order.
  for (EdgeIndex e : selected) {
    if (!used[e] && !internal_node(g.edge(e).source)) chain_from(e);
  }
  for (EdgeIndex e : selected) {
    if (!used[e]) chain_from(e);
  }
  SortUnique(r.paths);
  return r;
}

namespace internal {

// Appends every walk of exactly `length` edges, each as length+1 nodes.
// `keep` filters on the edge sequence of a finished walk.
template <typename Keep>
void CollectWalks(const Digraph& g, int length, Keep&& keep, std::vector<Path>& out) {
  Path nodes;
  std::vector<EdgeIndex> edges;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(edges.size()) == length) {
      if (keep(edges)) out.push_back(nodes);
      return;
    }
    for (EdgeIndex e : g.out_edges(nodes.back())) {
      edges.push_back(e);
      nodes.push_back(g.edge(e).target);
      self(self);
      nodes.pop_back();
      edges.pop_back();
    }
  };
  for (NodeIndex n = 0; n < g.node_count(); ++n) {
    nodes.assign(1, n);
    extend(extend);
  }
}

}  // namespace internal

// All walks of `length` edges (edges may repeat); length >= 1.
inline std::vector<Path> AllWalks(const Digraph& g, int length) {
  std::vector<Path> walks;
  internal::CollectWalks(g, length, [](const auto&) { return true; }, walks);
  SortUnique(walks);
  return walks;
}

inline RequirementSet EdgePairRequirements(const ModelGraph& model) {
  RequirementSet r;
  r.coverage = CoverageSpec::EdgePair(PlSetting::kNone);
  r.paths = AllWalks(model.graph(), 2);
  return r;
}

inline RequirementSet TdlRequirements(const ModelGraph& model, int x) {
  RequirementSet r;
  r.coverage = CoverageSpec::Tdl(x, PlSetting::kNone);
  r.paths = AllWalks(model.graph(), x);
  return r;
}

// Prime paths by iterative extension. Starting from every single node, each
// simple path is extended by one successor at a time. A path becomes final
// when it closes a cycle back to its first node or when no successor can
// extend it; finals that are sub-paths of other finals are then dropped.
// Throws kResourceLimitExceeded once more than `cap` paths have been built.
inline RequirementSet PrimePaths(const PlainGraph& plain,
                                 std::size_t cap = kDefaultPrimePathCap) {
  const Digraph& g = plain.graph();
  std::vector<Path> frontier;
  std::vector<Path> finals;
  std::size_t built = 0;
  auto count = [&]() {
    if (++built > cap) {
      throw Error(ErrorCode::kResourceLimitExceeded,
                  "prime path enumeration exceeded " + std::to_string(cap) +
                      " paths");
    }
  };
  for (NodeIndex n = 0; n < g.node_count(); ++n) {
    count();
    frontier.push_back({n});
  }

  std::vector<bool> on_path(g.node_count(), false);
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (Path& p : frontier) {
      for (NodeIndex n : p) on_path[n] = true;
      bool extended = false;
      for (EdgeIndex e : g.out_edges(p.back())) {
        const NodeIndex w = g.edge(e).target;
        if (w == p.front()) {
          count();
          Path cycle = p;
          cycle.push_back(w);
          finals.push_back(std::move(cycle));
          extended = true;
        } else if (!on_path[w]) {
          count();
          Path longer = p;
          longer.push_back(w);
          next.push_back(std::move(longer));
          extended = true;
        }
      }
      for (NodeIndex n : p) on_path[n] = false;
      if (!extended && p.size() >= 2) finals.push_back(std::move(p));
    }
    frontier = std::move(next);
  }

  std::unordered_set<Path, PathHash> dominated;
  for (const Path& f : finals) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 2; j <= f.size(); ++j) {
        if (i == 0 && j == f.size()) continue;
        dominated.insert(Path(f.begin() + i, f.begin() + j));
      }
    }
  }
  RequirementSet r;
  r.coverage = CoverageSpec::PrimePath(PlSetting::kNone);
  for (Path& f : finals) {
    if (!dominated.contains(f)) r.paths.push_back(std::move(f));
  }
  SortUnique(r.paths);
  return r;
}

struct RequirementOptions {
  std::size_t prime_path_cap = kDefaultPrimePathCap;
};

// Dispatch over coverage intensity. Atomic and sequence conversion apply only
// to edge coverage reduced by a priority level; every other intensity is
// built independently of the priority level.
inline RequirementSet BuildRequirements(const SutModel& model,
                                        const CoverageSpec& cov,
                                        Conversion conversion,
                                        const RequirementOptions& options = {}) {
  const bool needs_conversion =
      cov.intensity == Intensity::kEdge && cov.pl != PlSetting::kNone;
  const bool has_conversion = conversion != Conversion::kNotApplicable;
  if (needs_conversion != has_conversion) {
    throw Error(ErrorCode::kInvalidCombination,
                CoverageName(cov) + " with pl=" + std::string(PlName(cov.pl)) +
                    " cannot use " + std::string(ConversionName(conversion)) +
                    " conversion");
  }
  RequirementSet r;
  switch (cov.intensity) {
    case Intensity::kEdge: {
      if (cov.pl == PlSetting::kNone) {
        // Unreduced edge coverage: every edge is a requirement.
        r.paths = AllWalks(ModelGraph(model).graph(), 1);
        break;
      }
      ModelGraph g(model);
      const PriorityLevel level = *ToPriorityLevel(cov.pl);
      r = conversion == Conversion::kAtomic ? AtomicRequirements(g, level)
                                            : SequenceRequirements(g, level);
      break;
    }
    case Intensity::kEdgePair:
      r = EdgePairRequirements(ModelGraph(model));
      break;
    case Intensity::kTdl:
      r = TdlRequirements(ModelGraph(model), cov.tdl);
      break;
    case Intensity::kPrimePath:
      r = PrimePaths(ToPlainGraph(model), options.prime_path_cap);
      break;
  }
  r.coverage = cov;
  r.conversion = conversion;
  return r;
}

}  // namespace pathgen

#endif  // PATHGEN_REQUIREMENTS_HPP_
