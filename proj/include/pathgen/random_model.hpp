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

// Seeded generator of valid SUT models with a requested shape.
//
// Construction: nodes are numbered 0..n-1, node 0 is the start and the last
// `end_count` nodes are the ends. Every node i > 0 first receives an edge from
// an earlier non-end node (reachability); every non-end node then gets an
// edge to a later node if it has none (co-reachability). Extra forward edges
// are added up to the requested edge count, and each loop is a self-loop or
// the reverse of an existing edge, so it always closes a cycle.
//
// Only the raw output of std::mt19937_64 is used (the standard fixes its
// sequence), so models are identical across standard library implementations.

#ifndef PATHGEN_RANDOM_MODEL_HPP_
#define PATHGEN_RANDOM_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathgen/error.hpp"
#include "pathgen/model.hpp"

namespace pathgen {

struct RandomModelParams {
  int node_count = 10;
  double edge_factor = 1.3;
  double high_ratio = 0.25;
  double medium_ratio = 0.25;
  int loop_count = 0;
  int end_count = 1;
};

namespace internal {

// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformBelow(rng, i)]);
  }
}

}  // namespace internal

inline void CheckRandomModelParams(const RandomModelParams& p) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kInfeasibleParams, why);
  };
  if (p.node_count < 2) fail("node_count must be at least 2");
  if (!(p.edge_factor >= 1.0)) fail("edge_factor must be at least 1");
  if (!(p.high_ratio >= 0.0 && p.high_ratio <= 1.0)) fail("high_ratio out of [0,1]");
  if (!(p.medium_ratio >= 0.0 && p.medium_ratio <= 1.0)) {
    fail("medium_ratio out of [0,1]");
  }
  if (p.high_ratio + p.medium_ratio > 1.0 + 1e-12) {
    fail("high_ratio + medium_ratio exceeds 1");
  }
  if (p.loop_count < 0) fail("loop_count must be non-negative");
  if (p.end_count < 1) fail("end_count must be positive");
  if (p.end_count > p.node_count - 1) fail("end_count must leave room for the start");
}

inline SutModel GenerateRandomModel(const RandomModelParams& p, std::uint64_t seed) {
  CheckRandomModelParams(p);
  std::mt19937_64 rng(seed);
  const int n = p.node_count;
  const int first_end = n - p.end_count;

  std::set<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> order;
  auto add = [&](int u, int v) {
    if (edges.insert({u, v}).second) order.push_back({u, v});
  };

  for (int v = 1; v < n; ++v) {
    // Non-end predecessors among 0..v-1; node 0 always qualifies.
    const int candidates = std::min(v, first_end);
    add(static_cast<int>(internal::UniformBelow(rng, candidates)), v);
  }
  std::vector<bool> has_out(n, false);
  for (const auto& [u, v] : edges) has_out[u] = true;
  for (int u = first_end - 1; u >= 0; --u) {
    if (has_out[u]) continue;
    const int v = u + 1 + static_cast<int>(internal::UniformBelow(rng, n - u - 1));
    add(u, v);
    has_out[u] = true;
  }

  const long target =
      std::max<long>(static_cast<long>(std::lround(p.edge_factor * n)),
                     static_cast<long>(edges.size()) + p.loop_count);
  const long forward_target = target - p.loop_count;
  std::vector<std::pair<int, int>> free_forward;
  for (int u = 0; u < first_end; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!edges.contains({u, v})) free_forward.push_back({u, v});
    }
  }
  internal::Shuffle(free_forward, rng);
  for (const auto& [u, v] : free_forward) {
    if (static_cast<long>(edges.size()) >= forward_target) break;
    add(u, v);
  }

  for (int k = 0; k < p.loop_count; ++k) {
    std::vector<std::pair<int, int>> options;
    for (int u = 1; u < n; ++u) {
      if (!edges.contains({u, u})) options.push_back({u, u});
    }
    for (const auto& [u, v] : edges) {
      if (u != v && v != 0 && !edges.contains({v, u})) options.push_back({v, u});
    }
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    if (options.empty()) {
      throw Error(ErrorCode::kInfeasibleParams,
                  "cannot place " + std::to_string(p.loop_count) + " loops");
    }
    const auto [u, v] = options[internal::UniformBelow(rng, options.size())];
    add(u, v);
  }

  const int width = static_cast<int>(std::to_string(n - 1).size());
  auto node_name = [&](int v) {
    std::string digits = std::to_string(v);
    return "n" + std::string(width - digits.size(), '0') + digits;
  };
  const int edge_width = static_cast<int>(std::to_string(order.size()).size());
  auto edge_name = [&](std::size_t i) {
    std::string digits = std::to_string(i + 1);
    return "e" + std::string(edge_width - digits.size(), '0') + digits;
  };

  const std::size_t m = order.size();
  const auto high = static_cast<std::size_t>(std::lround(p.high_ratio * m));
  const auto medium = std::min<std::size_t>(
      m - std::min(high, m), static_cast<std::size_t>(std::lround(p.medium_ratio * m)));
  std::vector<std::size_t> ranks(m);
  for (std::size_t i = 0; i < m; ++i) ranks[i] = i;
  internal::Shuffle(ranks, rng);
  std::vector<Priority> priority(m, Priority::kLow);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < high) {
      priority[ranks[i]] = Priority::kHigh;
    } else if (i < high + medium) {
      priority[ranks[i]] = Priority::kMedium;
    }
  }

  SutModel model;
  model.name = "random-" + std::to_string(seed);
  for (int v = 0; v < n; ++v) model.nodes.push_back(node_name(v));
  model.start = node_name(0);
  for (int v = first_end; v < n; ++v) model.ends.push_back(node_name(v));
  for (std::size_t i = 0; i < m; ++i) {
    model.edges.push_back({edge_name(i), node_name(order[i].first),
                           node_name(order[i].second), priority[i]});
  }
  return model;
}

}  // namespace pathgen

#endif  // PATHGEN_RANDOM_MODEL_HPP_
