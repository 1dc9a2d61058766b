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

// Indexed views of a SutModel.
//
// Node indices are the rank of the node id in lexicographic order, and edge
// indices the rank of the edge id. Every view built from the same model
// therefore shares one index space, and comparing two index sequences
// lexicographically orders them exactly like the underlying id sequences.

#ifndef PATHGEN_GRAPH_HPP_
#define PATHGEN_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pathgen/error.hpp"
#include "pathgen/model.hpp"

namespace pathgen {

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// A walk through the graph given as node indices. Requirement paths and test
// paths both use this representation.
using Path = std::vector<NodeIndex>;

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

class Digraph {
 public:
  struct EdgeRecord {
    EdgeId id;
    NodeIndex source;
    NodeIndex target;
  };

  Digraph() = default;

  // Requires CheckStructure(model) to pass.
  explicit Digraph(const SutModel& model) {
    node_ids_ = model.nodes;
    std::sort(node_ids_.begin(), node_ids_.end());
    for (NodeIndex i = 0; i < node_ids_.size(); ++i) index_[node_ids_[i]] = i;

    std::vector<const Edge*> edges;
    for (const Edge& e : model.edges) edges.push_back(&e);
    std::sort(edges.begin(), edges.end(),
              [](const Edge* a, const Edge* b) { return a->id < b->id; });
    for (const Edge* e : edges) {
      edges_.push_back({e->id, IndexOf(e->source), IndexOf(e->target)});
    }

    out_.assign(node_ids_.size(), {});
    in_.assign(node_ids_.size(), {});
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
      out_[edges_[e].source].push_back(e);
      in_[edges_[e].target].push_back(e);
    }
    // Successor order is by target id, then edge id.
    for (auto& list : out_) {
      std::stable_sort(list.begin(), list.end(), [&](EdgeIndex a, EdgeIndex b) {
        return edges_[a].target < edges_[b].target;
      });
    }
    for (auto& list : in_) {
      std::stable_sort(list.begin(), list.end(), [&](EdgeIndex a, EdgeIndex b) {
        return edges_[a].source < edges_[b].source;
      });
    }

    start_ = IndexOf(model.start);
    is_end_.assign(node_ids_.size(), false);
    for (const NodeId& n : model.ends) {
      ends_.push_back(IndexOf(n));
      is_end_[ends_.back()] = true;
    }
    std::sort(ends_.begin(), ends_.end());
  }

  std::size_t node_count() const { return node_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const NodeId& node_id(NodeIndex n) const { return node_ids_[n]; }
  const EdgeRecord& edge(EdgeIndex e) const { return edges_[e]; }

  std::optional<NodeIndex> FindNode(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeIndex start() const { return start_; }
  std::span<const NodeIndex> ends() const { return ends_; }
  bool is_end(NodeIndex n) const { return is_end_[n]; }

  std::span<const EdgeIndex> out_edges(NodeIndex n) const { return out_[n]; }
  std::span<const EdgeIndex> in_edges(NodeIndex n) const { return in_[n]; }

  // The edge u->v with the smallest id, if any.
  std::optional<EdgeIndex> FindEdge(NodeIndex u, NodeIndex v) const {
    for (EdgeIndex e : out_[u]) {
      if (edges_[e].target == v) return e;
      if (edges_[e].target > v) break;
    }
    return std::nullopt;
  }

  bool HasParallelEdges() const {
    for (const auto& list : out_) {
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (edges_[list[i]].target == edges_[list[i - 1]].target) return true;
      }
    }
    return false;
  }

  // True if consecutive nodes of `path` are joined by edges.
  bool IsWalk(std::span<const NodeIndex> path) const {
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (path[i - 1] >= node_count() || path[i] >= node_count()) return false;
      if (!FindEdge(path[i - 1], path[i])) return false;
    }
    return true;
  }

  std::vector<NodeId> ToIds(std::span<const NodeIndex> path) const {
    std::vector<NodeId> ids;
    ids.reserve(path.size());
    for (NodeIndex n : path) ids.push_back(node_ids_[n]);
    return ids;
  }

  // Inverse of ToIds. Throws kUnknownNode for ids not in the graph.
  Path ToPath(std::span<const NodeId> ids) const {
    Path path;
    for (const NodeId& id : ids) {
      auto n = FindNode(id);
      if (!n) throw Error(ErrorCode::kUnknownNode, "'" + id + "'");
      path.push_back(*n);
    }
    return path;
  }

  // Edge count of the shortest walk from each node to `target`.
  std::vector<std::uint32_t> DistancesTo(NodeIndex target) const {
    return ReverseBfs(std::span<const NodeIndex>(&target, 1));
  }

  // Edge count of the shortest walk from each node to the nearest end node.
  std::vector<std::uint32_t> DistancesToEnds() const { return ReverseBfs(ends_); }

 private:
  NodeIndex IndexOf(const NodeId& id) const { return index_.at(id); }

  std::vector<std::uint32_t> ReverseBfs(std::span<const NodeIndex> seeds) const {
    std::vector<std::uint32_t> dist(node_count(), kUnreachable);
    std::deque<NodeIndex> queue;
    for (NodeIndex s : seeds) {
      dist[s] = 0;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      NodeIndex n = queue.front();
      queue.pop_front();
      for (EdgeIndex e : in_[n]) {
        NodeIndex m = edges_[e].source;
        if (dist[m] == kUnreachable) {
          dist[m] = dist[n] + 1;
          queue.push_back(m);
        }
      }
    }
    return dist;
  }

  std::vector<NodeId> node_ids_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  NodeIndex start_ = 0;
  std::vector<NodeIndex> ends_;
  std::vector<bool> is_end_;
};

// The prioritized multigraph: topology plus one priority per edge.
class ModelGraph {
 public:
  explicit ModelGraph(const SutModel& model) : graph_(model) {
    std::unordered_map<std::string_view, Priority> by_id;
    for (const Edge& e : model.edges) by_id[e.id] = e.priority;
    priorities_.reserve(graph_.edge_count());
    for (EdgeIndex e = 0; e < graph_.edge_count(); ++e) {
      priorities_.push_back(by_id.at(graph_.edge(e).id));
    }
  }

  const Digraph& graph() const { return graph_; }
  Priority priority(EdgeIndex e) const { return priorities_[e]; }

  bool IsSelected(EdgeIndex e, PriorityLevel level) const {
    return pathgen::IsSelected(priorities_[e], level);
  }

  std::vector<EdgeIndex> SelectedEdges(PriorityLevel level) const {
    std::vector<EdgeIndex> selected;
    for (EdgeIndex e = 0; e < priorities_.size(); ++e) {
      if (IsSelected(e, level)) selected.push_back(e);
    }
    return selected;
  }

 private:
  Digraph graph_;
  std::vector<Priority> priorities_;
};

// The model as a simple directed graph: priorities dropped, at most one edge
// per ordered node pair. Self-loops are single edges and are allowed.
class PlainGraph {
 public:
  const Digraph& graph() const { return graph_; }

  friend PlainGraph ToPlainGraph(const SutModel& model);

 private:
  explicit PlainGraph(Digraph graph) : graph_(std::move(graph)) {}

  Digraph graph_;
};

// Fails with kParallelEdgesPresent when some ordered node pair carries two or
// more edges; remodelling them is left to the author of the model.
inline PlainGraph ToPlainGraph(const SutModel& model) {
  CheckStructure(model);
  Digraph graph(model);
  if (graph.HasParallelEdges()) {
    std::string pairs;
    for (NodeIndex u = 0; u < graph.node_count(); ++u) {
      auto out = graph.out_edges(u);
      for (std::size_t i = 1; i < out.size(); ++i) {
        const auto& prev = graph.edge(out[i - 1]);
        const auto& cur = graph.edge(out[i]);
        if (prev.target == cur.target) {
          pairs += " " + prev.id + "/" + cur.id;
        }
      }
    }
    throw Error(ErrorCode::kParallelEdgesPresent,
                "model '" + model.name + "' has parallel edges:" + pairs);
  }
  return PlainGraph(std::move(graph));
}

struct PathHash {
  std::size_t operator()(const Path& path) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (NodeIndex n : path) {
      h ^= n + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// True if `needle` occurs as a contiguous run of `haystack`.
inline bool IsSubPath(std::span<const NodeIndex> needle,
                      std::span<const NodeIndex> haystack) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

inline std::size_t EdgeLength(const Path& path) {
  return path.empty() ? 0 : path.size() - 1;
}

// Canonical order among paths: fewer edges first, then lexicographic.
inline bool ShorterThenLexLess(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline void SortUnique(std::vector<Path>& paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
}

inline std::string FormatPath(const Digraph& graph, std::span<const NodeIndex> path,
                              std::string_view separator = "->") {
  std::string text;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) text += separator;
    text += graph.node_id(path[i]);
  }
  return text;
}

}  // namespace pathgen

#endif  // PATHGEN_GRAPH_HPP_
