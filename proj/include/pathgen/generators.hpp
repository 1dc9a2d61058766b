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

// Test set generators. Each turns a model (and, for BF/SC/PG, a requirement
// set) into a set of test paths that run from the start node to an end node.
//
//   BF   extends every requirement to a test path, then prunes duplicates and
//        paths whose covered requirements are a subset of another path's.
//   SC   greedy set cover over the BF extensions plus the PG splices.
//   PG   overlap graph over requirements, minimum path cover by maximum
//        bipartite matching, one spliced super-path per chain.
//   RSC  greedy selection of priority edges out of the SC prime-path set.
//   PPT  PG splicing over priority-restricted walks of the requested depth.
//   PCT  SC over all walks of the requested depth, ignoring priorities.
//
// Ties are always broken by fewer edges, then lexicographic node ids, so
// output is fully determined by the input.

#ifndef PATHGEN_GENERATORS_HPP_
#define PATHGEN_GENERATORS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pathgen/error.hpp"
#include "pathgen/graph.hpp"
#include "pathgen/model.hpp"
#include "pathgen/requirements.hpp"

namespace pathgen {

// Declaration order is the canonical candidate order used in reports.
enum class AlgorithmId { kPpt, kRsc, kBf, kSc, kPg, kPct };

inline constexpr std::array<AlgorithmId, 6> kAllAlgorithms = {
    AlgorithmId::kPpt, AlgorithmId::kRsc, AlgorithmId::kBf,
    AlgorithmId::kSc,  AlgorithmId::kPg,  AlgorithmId::kPct};

inline std::string_view AlgorithmName(AlgorithmId a) {
  switch (a) {
    case AlgorithmId::kPct: return "PCT";
    case AlgorithmId::kPpt: return "PPT";
    case AlgorithmId::kBf: return "BF";
    case AlgorithmId::kSc: return "SC";
    case AlgorithmId::kPg: return "PG";
    case AlgorithmId::kRsc: return "RSC";
  }
  return "?";
}

inline std::optional<AlgorithmId> ParseAlgorithm(std::string_view name) {
  for (AlgorithmId a : kAllAlgorithms) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

struct TestSet {
  AlgorithmId algorithm = AlgorithmId::kBf;
  Conversion conversion = Conversion::kNotApplicable;
  std::vector<Path> paths;

  friend bool operator==(const TestSet&, const TestSet&) = default;
};

// A test path starts at the start node, ends at an end node, has at least one
// edge and follows edges of `g`.
inline bool IsTestPath(const Digraph& g, const Path& path) {
  return path.size() >= 2 && path.front() == g.start() && g.is_end(path.back()) &&
         g.IsWalk(path);
}

// Wraps requirement paths into test paths with the shortest prefix from the
// start node and the shortest suffix to the nearest end node, preferring the
// lexicographically smallest among equally short choices. Distance maps are
// cached per target node.
class PathExtender {
 public:
  explicit PathExtender(const Digraph& g)
      : g_(g), to_end_(g.DistancesToEnds()) {}

  Path Extend(const Path& requirement) {
    Path path = ShortestPath(g_.start(), requirement.front());
    path.insert(path.end(), requirement.begin() + 1, requirement.end());
    WalkDown(path, to_end_);
    return path;
  }

  // Lexicographically smallest among the shortest walks from `from` to `to`,
  // both ends included.
  Path ShortestPath(NodeIndex from, NodeIndex to) {
    auto it = to_node_.find(to);
    if (it == to_node_.end()) it = to_node_.emplace(to, g_.DistancesTo(to)).first;
    if (it->second[from] == kUnreachable) {
      throw Error(ErrorCode::kInvalidModel, "node '" + g_.node_id(to) +
                                                "' unreachable from '" +
                                                g_.node_id(from) + "'");
    }
    Path path{from};
    WalkDown(path, it->second);
    return path;
  }

 private:
  // Follows strictly decreasing distance to zero, smallest successor first.
  void WalkDown(Path& path, const std::vector<std::uint32_t>& dist) const {
    NodeIndex at = path.back();
    if (dist[at] == kUnreachable) {
      throw Error(ErrorCode::kInvalidModel,
                  "node '" + g_.node_id(at) + "' cannot reach its target");
    }
    while (dist[at] > 0) {
      for (EdgeIndex e : g_.out_edges(at)) {
        const NodeIndex w = g_.edge(e).target;
        if (dist[w] + 1 == dist[at]) {
          at = w;
          break;
        }
      }
      path.push_back(at);
    }
  }

  const Digraph& g_;
  std::vector<std::uint32_t> to_end_;
  std::unordered_map<NodeIndex, std::vector<std::uint32_t>> to_node_;
};

inline Path ExtendToTestPath(const PlainGraph& g, const Path& requirement) {
  PathExtender extender(g.graph());
  return extender.Extend(requirement);
}

// Looks up which requirements occur as contiguous sub-paths of a path.
class RequirementIndex {
 public:
  explicit RequirementIndex(const std::vector<Path>& requirements) {
    for (std::uint32_t i = 0; i < requirements.size(); ++i) {
      index_.emplace(requirements[i], i);
      min_len_ = std::min(min_len_, requirements[i].size());
      max_len_ = std::max(max_len_, requirements[i].size());
    }
  }

  // Sorted, duplicate-free requirement indices covered by `path`.
  std::vector<std::uint32_t> CoveredBy(const Path& path) const {
    std::vector<std::uint32_t> covered;
    Path window;
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t len = min_len_; len <= max_len_ && i + len <= path.size();
           ++len) {
        window.assign(path.begin() + i, path.begin() + i + len);
        if (auto it = index_.find(window); it != index_.end()) {
          covered.push_back(it->second);
        }
      }
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return covered;
  }

 private:
  std::unordered_map<Path, std::uint32_t, PathHash> index_;
  std::size_t min_len_ = SIZE_MAX;
  std::size_t max_len_ = 0;
};

namespace internal {

inline void RequireNonEmpty(const std::vector<Path>& requirements,
                            std::string_view who) {
  if (requirements.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                std::string(who) + " needs at least one requirement");
  }
}

inline std::vector<Path> ExtendAll(const Digraph& g,
                                   const std::vector<Path>& requirements) {
  PathExtender extender(g);
  std::vector<Path> paths;
  paths.reserve(requirements.size());
  for (const Path& r : requirements) paths.push_back(extender.Extend(r));
  return paths;
}

// Drops duplicates and every path whose covered requirements are a subset of
// those of another kept path.
inline std::vector<Path> PruneSubsumed(std::vector<Path> paths,
                                       const std::vector<Path>& requirements) {
  SortUnique(paths);
  RequirementIndex index(requirements);
  struct Entry {
    Path path;
    std::vector<std::uint32_t> covered;
  };
  std::vector<Entry> entries;
  for (Path& p : paths) {
    auto covered = index.CoveredBy(p);
    entries.push_back({std::move(p), std::move(covered)});
  }
  // Larger coverage first, so a path can only be subsumed by one already kept.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.covered.size() != b.covered.size()) {
      return a.covered.size() > b.covered.size();
    }
    return ShorterThenLexLess(a.path, b.path);
  });
  std::vector<const Entry*> kept;
  for (const Entry& e : entries) {
    const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const Entry* k) {
      return std::includes(k->covered.begin(), k->covered.end(), e.covered.begin(),
                           e.covered.end());
    });
    if (!subsumed) kept.push_back(&e);
  }
  std::vector<Path> result;
  for (const Entry* e : kept) result.push_back(e->path);
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<Path> BruteForce(const Digraph& g,
                                    const std::vector<Path>& requirements) {
  RequireNonEmpty(requirements, "BF");
  return PruneSubsumed(ExtendAll(g, requirements), requirements);
}

// Largest k such that the last k nodes of `p` equal the first k nodes of `q`,
// or 0 when they share no such overlap.
inline std::size_t MaxOverlap(const Path& p, const Path& q) {
  const std::size_t limit = std::min(p.size(), q.size());
  for (std::size_t k = limit; k >= 1; --k) {
    if (std::equal(p.end() - k, p.end(), q.begin())) return k;
  }
  return 0;
}

// Splices requirements along a minimum path cover of their overlap graph and
// returns one super-path per chain (not yet extended to test paths).
inline std::vector<Path> SpliceChains(const std::vector<Path>& requirements) {
  const std::size_t n = requirements.size();

  // Arcs p -> q for every q whose first node occurs in p such that the tail of
  // p from there is a prefix of q; the earliest occurrence is the maximal
  // overlap.
  std::map<NodeIndex, std::vector<std::uint32_t>> by_first;
  for (std::uint32_t q = 0; q < n; ++q) by_first[requirements[q].front()].push_back(q);
  struct Arc {
    std::uint32_t to;
    std::uint32_t overlap;
  };
  std::vector<std::vector<Arc>> arcs(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    const Path& pp = requirements[p];
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < pp.size(); ++i) {
      auto bucket = by_first.find(pp[i]);
      if (bucket == by_first.end()) continue;
      const std::size_t k = pp.size() - i;
      for (std::uint32_t q : bucket->second) {
        if (q == p || seen[q]) continue;
        const Path& qq = requirements[q];
        if (k > qq.size()) continue;
        if (std::equal(pp.begin() + i, pp.end(), qq.begin())) {
          seen[q] = true;
          arcs[p].push_back({q, static_cast<std::uint32_t>(k)});
        }
      }
    }
    std::stable_sort(arcs[p].begin(), arcs[p].end(), [](const Arc& a, const Arc& b) {
      if (a.overlap != b.overlap) return a.overlap > b.overlap;
      return a.to < b.to;
    });
  }

  // Maximum bipartite matching (augmenting paths, greedy start).
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> match_right(n, kNone);  // right q -> left p
  std::vector<std::uint32_t> match_left(n, kNone);   // left p -> right q
  for (std::uint32_t p = 0; p < n; ++p) {
    for (const Arc& a : arcs[p]) {
      if (match_right[a.to] == kNone) {
        match_right[a.to] = p;
        match_left[p] = a.to;
        break;
      }
    }
  }
  std::vector<std::uint32_t> visited(n, kNone);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (match_left[root] != kNone || arcs[root].empty()) continue;
    // Iterative DFS over alternating paths; stack holds (left, next arc).
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    std::vector<std::uint32_t> via;  // right vertex taken from each stack frame
    visited[root] = root;
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      auto& [p, next] = stack.back();
      if (next == arcs[p].size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const std::uint32_t q = arcs[p][next++].to;
      const std::uint32_t owner = match_right[q];
      if (owner == kNone) {
        via.push_back(q);
        // Flip the alternating path.
        for (std::size_t level = 0; level < stack.size(); ++level) {
          match_left[stack[level].first] = via[level];
          match_right[via[level]] = stack[level].first;
        }
        augmented = true;
      } else if (visited[owner] != root) {
        visited[owner] = root;
        via.push_back(q);
        stack.push_back({owner, 0});
      }
    }
  }

  std::vector<std::uint32_t> overlap_of(n, 0);
  for (std::uint32_t p = 0; p < n; ++p) {
    if (match_left[p] == kNone) continue;
    for (const Arc& a : arcs[p]) {
      if (a.to == match_left[p]) overlap_of[p] = a.overlap;
    }
  }

  std::vector<Path> supers;
  std::vector<bool> used(n, false);
  auto splice_from = [&](std::uint32_t head) {
    Path super = requirements[head];
    used[head] = true;
    std::uint32_t at = head;
    while (match_left[at] != kNone && !used[match_left[at]]) {
      const std::uint32_t q = match_left[at];
      const Path& qq = requirements[q];
      super.insert(super.end(), qq.begin() + overlap_of[at], qq.end());
      used[q] = true;
      at = q;
    }
    supers.push_back(std::move(super));
  };
  for (std::uint32_t p = 0; p < n; ++p) {
    if (match_right[p] == kNone) splice_from(p);
  }
  // Whatever is left lies on matched cycles; open each at its smallest member.
  for (std::uint32_t p = 0; p < n; ++p) {
    if (!used[p]) splice_from(p);
  }
  return supers;
}

inline std::vector<Path> PrefixGraph(const Digraph& g,
                                     const std::vector<Path>& requirements) {
  RequireNonEmpty(requirements, "PG");
  return PruneSubsumed(ExtendAll(g, SpliceChains(requirements)), requirements);
}

inline std::vector<Path> SetCover(const Digraph& g,
                                  const std::vector<Path>& requirements) {
  RequireNonEmpty(requirements, "SC");
  std::vector<Path> pool = ExtendAll(g, requirements);
  std::vector<Path> spliced = ExtendAll(g, SpliceChains(requirements));
  pool.insert(pool.end(), spliced.begin(), spliced.end());
  SortUnique(pool);

  RequirementIndex index(requirements);
  std::vector<std::vector<std::uint32_t>> covers;
  covers.reserve(pool.size());
  for (const Path& p : pool) covers.push_back(index.CoveredBy(p));

  std::vector<bool> covered(requirements.size(), false);
  std::size_t remaining = requirements.size();
  std::vector<bool> taken(pool.size(), false);
  std::vector<Path> result;
  while (remaining > 0) {
    std::size_t best = pool.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (std::uint32_t r : covers[i]) gain += covered[r] ? 0 : 1;
      if (gain == 0) continue;
      if (gain > best_gain ||
          (gain == best_gain && ShorterThenLexLess(pool[i], pool[best]))) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == pool.size()) {
      throw Error(ErrorCode::kInvalidTestSet, "SC pool cannot cover requirements");
    }
    taken[best] = true;
    for (std::uint32_t r : covers[best]) {
      if (!covered[r]) {
        covered[r] = true;
        --remaining;
      }
    }
    result.push_back(pool[best]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace internal

inline TestSet BfGenerate(const PlainGraph& g, const RequirementSet& r) {
  return {AlgorithmId::kBf, r.conversion, internal::BruteForce(g.graph(), r.paths)};
}

inline TestSet ScGenerate(const PlainGraph& g, const RequirementSet& r) {
  return {AlgorithmId::kSc, r.conversion, internal::SetCover(g.graph(), r.paths)};
}

inline TestSet PgGenerate(const PlainGraph& g, const RequirementSet& r) {
  return {AlgorithmId::kPg, r.conversion, internal::PrefixGraph(g.graph(), r.paths)};
}

// Set cover with test set reduction. The SC solution for prime path coverage
// is the pool; paths are drawn from it greedily by how many still-uncovered
// priority edges they contain. Fails with kInvalidTestSet when a priority
// edge lies on no pooled path.
inline TestSet RscGenerate(const ModelGraph& model, const PlainGraph& g,
                           PriorityLevel level,
                           std::size_t prime_path_cap = kDefaultPrimePathCap) {
  const Digraph& graph = g.graph();
  const std::vector<Path> pool =
      internal::SetCover(graph, PrimePaths(g, prime_path_cap).paths);

  std::vector<std::vector<EdgeIndex>> pool_edges;
  for (const Path& p : pool) {
    std::vector<EdgeIndex> edges;
    for (std::size_t i = 1; i < p.size(); ++i) {
      edges.push_back(*graph.FindEdge(p[i - 1], p[i]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    pool_edges.push_back(std::move(edges));
  }

  std::vector<bool> cover(graph.edge_count(), false);
  std::size_t remaining = 0;
  for (EdgeIndex e : model.SelectedEdges(level)) {
    cover[e] = true;
    ++remaining;
  }
  std::vector<bool> taken(pool.size(), false);
  TestSet t{AlgorithmId::kRsc, Conversion::kNotApplicable, {}};
  while (remaining > 0) {
    std::size_t best = pool.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (EdgeIndex e : pool_edges[i]) gain += cover[e] ? 1 : 0;
      if (gain == 0) continue;
      if (gain > best_gain ||
          (gain == best_gain && ShorterThenLexLess(pool[i], pool[best]))) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == pool.size()) break;
    taken[best] = true;
    for (EdgeIndex e : pool_edges[best]) {
      if (cover[e]) {
        cover[e] = false;
        --remaining;
      }
    }
    t.paths.push_back(pool[best]);
  }

  // Completeness check: every priority edge must lie on a selected path.
  std::vector<bool> present(graph.edge_count(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!taken[i]) continue;
    for (EdgeIndex e : pool_edges[i]) present[e] = true;
  }
  std::string missing;
  for (EdgeIndex e : model.SelectedEdges(level)) {
    if (!present[e]) missing += " " + graph.edge(e).id;
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kInvalidTestSet,
                "RSC test set misses priority edges:" + missing);
  }
  if (t.paths.empty()) {
    throw Error(ErrorCode::kEmptyTestSet, "RSC: no priority edges to cover");
  }
  std::sort(t.paths.begin(), t.paths.end());
  return t;
}

// Requirements PPT works from: the chained priority edges for depth 1, and
// for deeper levels every walk of that many edges that contains a priority
// edge. A priority edge lying on no such walk is kept on its own.
inline std::vector<Path> PrioritizedWalks(const ModelGraph& model, int depth,
                                          PriorityLevel level) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "tdl must be >= 1");
  if (depth == 1) return SequenceRequirements(model, level).paths;

  const Digraph& g = model.graph();
  std::vector<Path> walks;
  std::vector<bool> seen(g.edge_count(), false);
  internal::CollectWalks(
      g, depth,
      [&](const std::vector<EdgeIndex>& edges) {
        bool keep = false;
        for (EdgeIndex e : edges) keep = keep || model.IsSelected(e, level);
        if (keep) {
          for (EdgeIndex e : edges) seen[e] = true;
        }
        return keep;
      },
      walks);
  for (EdgeIndex e : model.SelectedEdges(level)) {
    if (!seen[e]) walks.push_back({g.edge(e).source, g.edge(e).target});
  }
  SortUnique(walks);
  return walks;
}

inline TestSet PptGenerate(const ModelGraph& model, int depth, PriorityLevel level) {
  std::vector<Path> requirements = PrioritizedWalks(model, depth, level);
  if (requirements.empty()) {
    throw Error(ErrorCode::kEmptyTestSet, "PPT: no priority edges to cover");
  }
  return {AlgorithmId::kPpt, Conversion::kNotApplicable,
          internal::PrefixGraph(model.graph(), requirements)};
}

inline TestSet PctGenerate(const ModelGraph& model, int depth) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "tdl must be >= 1");
  std::vector<Path> requirements = AllWalks(model.graph(), depth);
  if (requirements.empty()) {
    throw Error(ErrorCode::kEmptyTestSet,
                "PCT: model has no walk of " + std::to_string(depth) + " edges");
  }
  return {AlgorithmId::kPct, Conversion::kNotApplicable,
          internal::SetCover(model.graph(), requirements)};
}

}  // namespace pathgen

#endif  // PATHGEN_GENERATORS_HPP_
