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

// The system-under-test model: a directed multigraph with a start node, a
// non-empty set of end nodes and a priority on every edge. Models are read
// from and written to a small JSON document:
//
//   {
//     "name": "diamond",
//     "nodes": [{"id": "s"}, {"id": "a"}, ...],
//     "startNode": "s",
//     "endNodes": ["t"],
//     "edges": [{"id": "e1", "source": "s", "target": "a",
//                "priority": "high"}, ...],
//     "nodePriorities": {"a": "medium"}          // optional
//   }
//
// Unknown keys are rejected. An edge without "priority" is low priority.

#ifndef PATHGEN_MODEL_HPP_
#define PATHGEN_MODEL_HPP_

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pathgen/error.hpp"

namespace pathgen {

using NodeId = std::string;
using EdgeId = std::string;

enum class Priority { kLow, kMedium, kHigh };

inline std::string_view PriorityName(Priority p) {
  switch (p) {
    case Priority::kHigh: return "high";
    case Priority::kMedium: return "medium";
    case Priority::kLow: return "low";
  }
  return "low";
}

inline std::optional<Priority> ParsePriority(std::string_view text) {
  if (text == "high") return Priority::kHigh;
  if (text == "medium") return Priority::kMedium;
  if (text == "low") return Priority::kLow;
  return std::nullopt;
}

// Priority level used to reduce coverage obligations. kHigh selects E_h,
// kMedium selects E_h and E_m together.
enum class PriorityLevel { kHigh, kMedium };

inline bool IsSelected(Priority p, PriorityLevel level) {
  if (p == Priority::kHigh) return true;
  return level == PriorityLevel::kMedium && p == Priority::kMedium;
}

struct Edge {
  EdgeId id;
  NodeId source;
  NodeId target;
  Priority priority = Priority::kLow;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct SutModel {
  std::string name;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  NodeId start;
  std::vector<NodeId> ends;
  // Parsed and kept, never consulted by any algorithm.
  std::map<NodeId, Priority> node_priorities;

  friend bool operator==(const SutModel&, const SutModel&) = default;
};

namespace internal {

inline void CheckKeys(const nlohmann::json& object,
                      std::initializer_list<std::string_view> allowed,
                      std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "unknown key '" + key + "' in " + std::string(where));
    }
  }
}

inline std::string RequireString(const nlohmann::json& object,
                                 const char* key, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + " needs string field '" + key + "'");
  }
  std::string value = it->get<std::string>();
  if (value.empty()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + " has empty '" + key + "'");
  }
  return value;
}

inline Priority RequirePriority(const nlohmann::json& value,
                                std::string_view where) {
  if (!value.is_string()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + ": priority must be a string");
  }
  auto p = ParsePriority(value.get<std::string>());
  if (!p) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + ": unknown priority '" +
                    value.get<std::string>() + "'");
  }
  return *p;
}

}  // namespace internal

// Checks ids and references. Reachability is left to ValidateModel.
inline void CheckStructure(const SutModel& model) {
  std::set<std::string_view> nodes;
  for (const NodeId& n : model.nodes) {
    if (n.empty()) throw Error(ErrorCode::kMalformedDocument, "empty node id");
    if (!nodes.insert(n).second) {
      throw Error(ErrorCode::kDuplicateId, "node '" + n + "'");
    }
  }
  std::set<std::string_view> edges;
  for (const Edge& e : model.edges) {
    if (e.id.empty()) throw Error(ErrorCode::kMalformedDocument, "empty edge id");
    if (!edges.insert(e.id).second) {
      throw Error(ErrorCode::kDuplicateId, "edge '" + e.id + "'");
    }
    for (const NodeId* endpoint : {&e.source, &e.target}) {
      if (!nodes.contains(*endpoint)) {
        throw Error(ErrorCode::kUnknownNode,
                    "edge '" + e.id + "' references '" + *endpoint + "'");
      }
    }
  }
  if (model.start.empty()) throw Error(ErrorCode::kMissingStart, "no start node");
  if (!nodes.contains(model.start)) {
    throw Error(ErrorCode::kUnknownNode, "start node '" + model.start + "'");
  }
  if (model.ends.empty()) throw Error(ErrorCode::kMissingEnds, "no end nodes");
  std::set<std::string_view> ends;
  for (const NodeId& n : model.ends) {
    if (!nodes.contains(n)) {
      throw Error(ErrorCode::kUnknownNode, "end node '" + n + "'");
    }
    if (!ends.insert(n).second) {
      throw Error(ErrorCode::kDuplicateId, "end node '" + n + "' listed twice");
    }
  }
  for (const auto& [n, p] : model.node_priorities) {
    if (!nodes.contains(n)) {
      throw Error(ErrorCode::kUnknownNode, "node priority for '" + n + "'");
    }
  }
}

inline SutModel ParseModel(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "top level must be an object");
  }
  internal::CheckKeys(
      doc, {"name", "nodes", "startNode", "endNodes", "edges", "nodePriorities"},
      "model");

  SutModel model;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) {
      throw Error(ErrorCode::kMalformedDocument, "'name' must be a string");
    }
    model.name = it->get<std::string>();
  }

  auto nodes = doc.find("nodes");
  if (nodes == doc.end() || !nodes->is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "'nodes' must be an array");
  }
  for (const auto& node : *nodes) {
    if (!node.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "node entries must be objects");
    }
    internal::CheckKeys(node, {"id"}, "node");
    model.nodes.push_back(internal::RequireString(node, "id", "node"));
  }

  auto start = doc.find("startNode");
  if (start == doc.end()) throw Error(ErrorCode::kMissingStart, "no 'startNode'");
  if (!start->is_string() || start->get<std::string>().empty()) {
    throw Error(ErrorCode::kMalformedDocument, "'startNode' must be a string");
  }
  model.start = start->get<std::string>();

  auto ends = doc.find("endNodes");
  if (ends == doc.end()) throw Error(ErrorCode::kMissingEnds, "no 'endNodes'");
  if (!ends->is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "'endNodes' must be an array");
  }
  for (const auto& end : *ends) {
    if (!end.is_string()) {
      throw Error(ErrorCode::kMalformedDocument, "end nodes must be strings");
    }
    model.ends.push_back(end.get<std::string>());
  }

  auto edges = doc.find("edges");
  if (edges == doc.end() || !edges->is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "'edges' must be an array");
  }
  for (const auto& edge : *edges) {
    if (!edge.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "edge entries must be objects");
    }
    internal::CheckKeys(edge, {"id", "source", "target", "priority"}, "edge");
    Edge e;
    e.id = internal::RequireString(edge, "id", "edge");
    e.source = internal::RequireString(edge, "source", "edge '" + e.id + "'");
    e.target = internal::RequireString(edge, "target", "edge '" + e.id + "'");
    if (auto p = edge.find("priority"); p != edge.end()) {
      e.priority = internal::RequirePriority(*p, "edge '" + e.id + "'");
    }
    model.edges.push_back(std::move(e));
  }

  if (auto np = doc.find("nodePriorities"); np != doc.end()) {
    if (!np->is_object()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "'nodePriorities' must be an object");
    }
    for (const auto& [id, level] : np->items()) {
      model.node_priorities[id] =
          internal::RequirePriority(level, "node priority '" + id + "'");
    }
  }

  CheckStructure(model);
  return model;
}

inline std::string SerializeModel(const SutModel& model) {
  nlohmann::ordered_json doc;
  doc["name"] = model.name;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const NodeId& n : model.nodes) doc["nodes"].push_back({{"id", n}});
  doc["startNode"] = model.start;
  doc["endNodes"] = model.ends;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : model.edges) {
    doc["edges"].push_back({{"id", e.id},
                            {"source", e.source},
                            {"target", e.target},
                            {"priority", PriorityName(e.priority)}});
  }
  if (!model.node_priorities.empty()) {
    nlohmann::ordered_json np = nlohmann::ordered_json::object();
    for (const auto& [id, p] : model.node_priorities) np[id] = PriorityName(p);
    doc["nodePriorities"] = np;
  }
  return doc.dump(2) + "\n";
}

enum class Severity { kError, kWarning };

struct ValidationIssue {
  Severity severity;
  std::string code;
  std::string message;
  std::vector<std::string> ids;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;

  bool Has(std::string_view code) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
  }
  const ValidationIssue* Find(std::string_view code) const {
    for (const ValidationIssue& i : issues) {
      if (i.code == code) return &i;
    }
    return nullptr;
  }
};

// Reports every node that cannot be reached from the start node, every node
// that cannot reach an end node, a start node without outgoing edges and
// (as a warning) parallel edges.
inline ValidationReport ValidateModel(const SutModel& model) {
  ValidationReport report;
  auto add = [&report](Severity severity, std::string code, std::string message,
                       std::vector<std::string> ids) {
    if (severity == Severity::kError) report.ok = false;
    report.issues.push_back(
        {severity, std::move(code), std::move(message), std::move(ids)});
  };

  try {
    CheckStructure(model);
  } catch (const Error& e) {
    add(Severity::kError, std::string(ErrorCodeName(e.code())), e.what(), {});
    return report;
  }

  std::map<std::string_view, std::vector<std::string_view>> out;
  std::map<std::string_view, std::vector<std::string_view>> in;
  for (const Edge& e : model.edges) {
    out[e.source].push_back(e.target);
    in[e.target].push_back(e.source);
  }
  auto flood = [](const std::vector<std::string_view>& seeds,
                  std::map<std::string_view, std::vector<std::string_view>>& adj) {
    std::set<std::string_view> seen(seeds.begin(), seeds.end());
    std::deque<std::string_view> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      std::string_view n = queue.front();
      queue.pop_front();
      for (std::string_view m : adj[n]) {
        if (seen.insert(m).second) queue.push_back(m);
      }
    }
    return seen;
  };
  const auto reachable = flood({model.start}, out);
  const auto coreachable = flood(
      std::vector<std::string_view>(model.ends.begin(), model.ends.end()), in);

  std::vector<NodeId> sorted_nodes = model.nodes;
  std::sort(sorted_nodes.begin(), sorted_nodes.end());
  std::vector<std::string> unreachable;
  std::vector<std::string> dead;
  for (const NodeId& n : sorted_nodes) {
    if (!reachable.contains(n)) unreachable.push_back(n);
    if (!coreachable.contains(n)) dead.push_back(n);
  }
  if (!unreachable.empty()) {
    add(Severity::kError, "unreachable-node",
        "nodes not reachable from the start node", unreachable);
  }
  if (!dead.empty()) {
    add(Severity::kError, "cannot-reach-end", "nodes that cannot reach an end node",
        dead);
  }
  if (out[model.start].empty()) {
    add(Severity::kError, "start-without-outgoing-edge",
        "the start node has no outgoing edge", {model.start});
  }

  std::map<std::pair<std::string_view, std::string_view>, std::vector<std::string>>
      by_pair;
  for (const Edge& e : model.edges) by_pair[{e.source, e.target}].push_back(e.id);
  std::vector<std::string> parallel;
  for (auto& [pair, ids] : by_pair) {
    if (ids.size() > 1) {
      std::sort(ids.begin(), ids.end());
      parallel.insert(parallel.end(), ids.begin(), ids.end());
    }
  }
  if (!parallel.empty()) {
    add(Severity::kWarning, "parallel-edges",
        "edges sharing the same source and target", parallel);
  }
  return report;
}

}  // namespace pathgen

#endif  // PATHGEN_MODEL_HPP_
