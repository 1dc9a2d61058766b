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

#ifndef PATHGEN_TESTS_TEST_UTIL_HPP_
#define PATHGEN_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "pathgen/pathgen.hpp"

namespace pathgen::testing {

// Diamond: s->a (high), s->b (low), a->t (high), b->t (medium).
inline SutModel M1() {
  SutModel m;
  m.name = "M1";
  m.nodes = {"s", "a", "b", "t"};
  m.start = "s";
  m.ends = {"t"};
  m.edges = {{"e1", "s", "a", Priority::kHigh},
             {"e2", "s", "b", Priority::kLow},
             {"e3", "a", "t", Priority::kHigh},
             {"e4", "b", "t", Priority::kMedium}};
  return m;
}

// Loop: s->a (low), a->a (high), a->t (low).
inline SutModel M2() {
  SutModel m;
  m.name = "M2";
  m.nodes = {"s", "a", "t"};
  m.start = "s";
  m.ends = {"t"};
  m.edges = {{"f1", "s", "a", Priority::kLow},
             {"f2", "a", "a", Priority::kHigh},
             {"f3", "a", "t", Priority::kLow}};
  return m;
}

inline SutModel SingleEdge() {
  SutModel m;
  m.name = "single";
  m.nodes = {"s", "t"};
  m.start = "s";
  m.ends = {"t"};
  m.edges = {{"g1", "s", "t", Priority::kHigh}};
  return m;
}

using IdPath = std::vector<std::string>;
using IdPaths = std::set<IdPath>;

inline IdPaths ToIdSet(const Digraph& g, const std::vector<Path>& paths) {
  IdPaths out;
  for (const Path& p : paths) out.insert(g.ToIds(p));
  return out;
}

inline IdPaths ToIdSet(const SutModel& m, const std::vector<Path>& paths) {
  return ToIdSet(Digraph(m), paths);
}

inline Path ToPath(const SutModel& m, const IdPath& ids) {
  return Digraph(m).ToPath(ids);
}

inline TestSet MakeTestSet(const SutModel& m, std::initializer_list<IdPath> paths,
                           AlgorithmId algorithm = AlgorithmId::kBf,
                           Conversion conversion = Conversion::kNotApplicable) {
  TestSet ts{algorithm, conversion, {}};
  for (const IdPath& p : paths) ts.paths.push_back(ToPath(m, p));
  return ts;
}

}  // namespace pathgen::testing

#endif  // PATHGEN_TESTS_TEST_UTIL_HPP_
