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

#include <random>

#include "gtest/gtest.h"
#include "pathgen/random_model.hpp"
#include "pathgen/selection.hpp"
#include "test_util.hpp"

namespace pathgen {
namespace {

using testing::IdPaths;
using testing::M1;
using testing::M2;
using testing::ToIdSet;

using A = AlgorithmId;
constexpr Conversion kNa = Conversion::kNotApplicable;
constexpr Conversion kAt = Conversion::kAtomic;
constexpr Conversion kSq = Conversion::kSequence;

CriteriaVector Counts(std::int64_t t, std::int64_t edges, std::int64_t uedges) {
  CriteriaVector v;
  v.t_count = t;
  v.edges_total = edges;
  v.uedges = uedges;
  return v;
}

TEST(SelectAlgorithmsTest, Roster) {
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::Edge(PlSetting::kHigh)),
            (std::vector<AlgorithmRun>{{A::kPpt, kNa}, {A::kRsc, kNa}, {A::kBf, kAt},
                                       {A::kBf, kSq}, {A::kSc, kAt}, {A::kSc, kSq},
                                       {A::kPg, kAt}, {A::kPg, kSq}}));
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::EdgePair(PlSetting::kMedium)),
            (std::vector<AlgorithmRun>{{A::kPpt, kNa}, {A::kRsc, kNa}}));
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::PrimePath(PlSetting::kNone)),
            (std::vector<AlgorithmRun>{{A::kBf, kNa}, {A::kSc, kNa}, {A::kPg, kNa}}));
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::Edge(PlSetting::kNone)),
            (std::vector<AlgorithmRun>{{A::kPct, kNa}}));
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::Tdl(3, PlSetting::kHigh)),
            (std::vector<AlgorithmRun>{{A::kPpt, kNa}}));
  EXPECT_EQ(SelectAlgorithms(CoverageSpec::PrimePath(PlSetting::kMedium)),
            (std::vector<AlgorithmRun>{{A::kRsc, kNa}}));
  for (auto cov : {CoverageSpec::Edge(PlSetting::kHigh), CoverageSpec::EdgePair(PlSetting::kNone),
                   CoverageSpec::Tdl(4, PlSetting::kNone)}) {
    const auto roster = SelectAlgorithms(cov);
    EXPECT_TRUE(std::is_sorted(roster.begin(), roster.end()));
  }
}

TEST(RunLabelTest, Labels) {
  EXPECT_EQ(RunLabel({A::kBf, kAt}), "BF-a");
  EXPECT_EQ(RunLabel({A::kSc, kSq}), "SC-s");
  EXPECT_EQ(RunLabel({A::kPpt, kNa}), "PPT");
}

TEST(SelectSingleTest, Examples) {
  std::vector<CriteriaVector> c = {Counts(2, 0, 0), Counts(3, 0, 0)};
  EXPECT_EQ(SelectSingle(Criterion::kTCount, c), (std::vector<std::size_t>{0}));

  c[0].e_h = 0.41;
  c[1].e_h = 0.38;
  EXPECT_EQ(SelectSingle(Criterion::kHighRatio, c), (std::vector<std::size_t>{0}));

  // RSC(4) PPT(4) BF(5): both tied candidates win.
  std::vector<CriteriaVector> tie = {Counts(4, 0, 0), Counts(4, 0, 0), Counts(5, 0, 0)};
  EXPECT_EQ(SelectSingle(Criterion::kTCount, tie), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(SelectSingle(Criterion::kTCount, {}), Error);
}

TEST(OptimalityFunctionTest, HandComputedExample) {
  const std::vector<CriteriaVector> c = {Counts(1, 2, 2), Counts(3, 6, 4)};
  const OptimalityResult r = OptimalityFunction({0.3, 0.4, 0.3}, c);
  EXPECT_NEAR(r.scores[0], 0.45, 1e-12);
  EXPECT_NEAR(r.scores[1], -0.45, 1e-12);
  EXPECT_EQ(r.winners, (std::vector<std::size_t>{0}));
}

TEST(OptimalityFunctionTest, IdenticalCandidatesScoreZero) {
  const std::vector<CriteriaVector> c(3, Counts(3, 7, 5));
  const OptimalityResult r = OptimalityFunction({0.3, 0.4, 0.3}, c);
  for (double s : r.scores) EXPECT_EQ(s, 0.0);
  EXPECT_EQ(r.winners.size(), 3u);
}

TEST(OptimalityFunctionTest, WeightValidation) {
  const std::vector<CriteriaVector> c = {Counts(1, 2, 2)};
  auto code = [&](OptimalityWeights w) {
    try {
      OptimalityFunction(w, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code({0.5, 0.5, 0.1}), ErrorCode::kInvalidWeights);
  EXPECT_EQ(code({1.2, -0.1, -0.1}), ErrorCode::kInvalidWeights);
  EXPECT_EQ(code({0.3, 0.4, 0.3 + 2e-9}), ErrorCode::kInvalidWeights);
  EXPECT_NO_THROW(OptimalityFunction({0.3, 0.4, 0.3 + 5e-10}, c));
  EXPECT_NO_THROW(OptimalityFunction({1.0, 0.0, 0.0}, c));
}

TEST(SequenceSelectTest, Examples) {
  const std::vector<CriteriaVector> c = {Counts(2, 5, 0), Counts(2, 4, 0), Counts(3, 1, 0)};
  const std::vector<Criterion> seq = {Criterion::kTCount, Criterion::kEdges};
  EXPECT_EQ(SequenceSelect(seq, c), (std::vector<std::size_t>{1}));
  const std::vector<Criterion> one = {Criterion::kEdges};
  EXPECT_EQ(SequenceSelect(one, c), SelectSingle(Criterion::kEdges, c));
  const std::vector<CriteriaVector> same(3, Counts(1, 1, 1));
  EXPECT_EQ(SequenceSelect(seq, same).size(), 3u);
  EXPECT_THROW(SequenceSelect({}, c), Error);
}

// Values from a small pool so ties are frequent.
CriteriaVector RandomVector(std::mt19937_64& rng) {
  CriteriaVector v;
  std::int64_t* counts[] = {&v.t_count,    &v.edges_total, &v.edges_high,
                            &v.edges_med,  &v.uedges,      &v.uedges_high,
                            &v.uedges_med, &v.nodes_total, &v.unodes};
  for (std::int64_t* c : counts) *c = 1 + static_cast<std::int64_t>(rng() % 4);
  double* ratios[] = {&v.er, &v.e_h, &v.e_m, &v.ue_h, &v.ue_m};
  for (double* r : ratios) *r = static_cast<double>(rng() % 5) / 4.0;
  return v;
}

std::vector<std::size_t> NaiveSingle(Criterion c, const std::vector<CriteriaVector>& v) {
  std::vector<std::size_t> winners;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool best = true;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const bool better = IsMaximized(c) ? v[j].Value(c) > v[i].Value(c)
                                         : v[j].Value(c) < v[i].Value(c);
      if (better) best = false;
    }
    if (best) winners.push_back(i);
  }
  return winners;
}

TEST(SelectionPropertiesTest, SingleMatchesNaiveOracle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    std::vector<CriteriaVector> v(1 + rng() % 8);
    for (auto& x : v) x = RandomVector(rng);
    const Criterion c = kAllCriteria[rng() % kCriterionCount];
    EXPECT_EQ(SelectSingle(c, v), NaiveSingle(c, v));
  }
}

TEST(SelectionPropertiesTest, SingleInvariantUnderRescaling) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    std::vector<CriteriaVector> v(1 + rng() % 8);
    for (auto& x : v) x = RandomVector(rng);
    std::vector<CriteriaVector> scaled = v;
    for (auto& x : scaled) {
      x.t_count *= 3;
      x.e_h *= 0.5;
    }
    EXPECT_EQ(SelectSingle(Criterion::kTCount, v), SelectSingle(Criterion::kTCount, scaled));
    EXPECT_EQ(SelectSingle(Criterion::kHighRatio, v),
              SelectSingle(Criterion::kHighRatio, scaled));
  }
}

std::vector<std::size_t> Permuted(const std::vector<std::size_t>& winners,
                                  const std::vector<std::size_t>& perm) {
  // perm[k] = original index placed at position k.
  std::vector<std::size_t> out;
  for (std::size_t w : winners) out.push_back(perm[w]);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SelectionPropertiesTest, SequenceSubsetAndPermutationInvariance) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    std::vector<CriteriaVector> v(1 + rng() % 8);
    for (auto& x : v) x = RandomVector(rng);
    std::vector<Criterion> seq(1 + rng() % 4);
    for (auto& c : seq) c = kAllCriteria[rng() % kCriterionCount];

    const auto single = SelectSingle(seq[0], v);
    const auto sequence = SequenceSelect(seq, v);
    for (std::size_t w : sequence) {
      EXPECT_TRUE(std::find(single.begin(), single.end(), w) != single.end());
    }
    const auto function = OptimalityFunction({0.3, 0.4, 0.3}, v).winners;

    std::vector<std::size_t> perm(v.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<CriteriaVector> shuffled;
    for (std::size_t k : perm) shuffled.push_back(v[k]);

    EXPECT_EQ(Permuted(SelectSingle(seq[0], shuffled), perm), single);
    EXPECT_EQ(Permuted(SequenceSelect(seq, shuffled), perm), sequence);
    EXPECT_EQ(Permuted(OptimalityFunction({0.3, 0.4, 0.3}, shuffled).winners, perm), function);
  }
}

TEST(RunPipelineTest, DiamondEdgeHigh) {
  const ComparisonReport r =
      RunPipeline(M1(), CoverageSpec::Edge(PlSetting::kHigh), SingleCriterion{Criterion::kTCount});
  ASSERT_EQ(r.candidates.size(), 8u);
  for (const CandidateResult& c : r.candidates) {
    ASSERT_TRUE(c.ok()) << RunLabel(c.run) << ": " << c.failure;
    EXPECT_EQ(c.criteria->t_count, 1);
    EXPECT_EQ(ToIdSet(M1(), c.test_set->paths), (IdPaths{{"s", "a", "t"}}));
    EXPECT_TRUE(c.verdict.satisfied);
  }
  EXPECT_EQ(r.winners.size(), 8u);
  EXPECT_EQ(r.selected, 0u);
  EXPECT_EQ(r.candidates[r.selected].run.algorithm, A::kPpt);
}

TEST(RunPipelineTest, DiamondEdgePairHigh) {
  const ComparisonReport r = RunPipeline(M1(), CoverageSpec::EdgePair(PlSetting::kHigh),
                                         SingleCriterion{Criterion::kEdges});
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].run.algorithm, A::kPpt);
  EXPECT_EQ(r.candidates[1].run.algorithm, A::kRsc);
}

TEST(RunPipelineTest, IdenticalCandidatesScoreZero) {
  const ComparisonReport r = RunPipeline(M1(), CoverageSpec::Edge(PlSetting::kHigh),
                                         WeightedFunction{{0.3, 0.4, 0.3}});
  for (const CandidateResult& c : r.candidates) {
    ASSERT_TRUE(c.opt_score.has_value());
    EXPECT_EQ(*c.opt_score, 0.0);
  }
}

TEST(RunPipelineTest, TiedWinnersKeepCanonicalOrder) {
  // Two priority edges on separate branches: every edge-pair candidate needs
  // two test paths, so PPT and RSC tie on |T|.
  SutModel m = M1();
  m.edges[2].priority = Priority::kLow;
  m.edges[3].priority = Priority::kHigh;
  const ComparisonReport r = RunPipeline(m, CoverageSpec::EdgePair(PlSetting::kHigh),
                                         SingleCriterion{Criterion::kTCount});
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].criteria->t_count, 2);
  EXPECT_EQ(r.candidates[1].criteria->t_count, 2);
  EXPECT_EQ(r.winners, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.selected, 0u);
}

TEST(RunPipelineTest, InvalidModelRejected) {
  SutModel m = M1();
  m.nodes.push_back("orphan");
  try {
    RunPipeline(m, CoverageSpec::Edge(PlSetting::kHigh), SingleCriterion{Criterion::kTCount});
    FAIL() << "expected invalid-model";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidModel);
  }
}

TEST(RunPipelineTest, ParallelEdgesPropagate) {
  SutModel m = M1();
  m.edges.push_back({"e5", "s", "a", Priority::kLow});
  try {
    RunPipeline(m, CoverageSpec::Edge(PlSetting::kHigh), SingleCriterion{Criterion::kTCount});
    FAIL() << "expected parallel-edges-present";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParallelEdgesPresent);
  }
}

TEST(RunPipelineTest, FailedCandidatesAreRecorded) {
  // Prime path enumeration is capped below what M2 needs: every candidate
  // fails and the pipeline reports that nothing is usable.
  PipelineOptions options;
  options.prime_path_cap = 3;
  try {
    RunPipeline(M2(), CoverageSpec::PrimePath(PlSetting::kNone),
                SingleCriterion{Criterion::kTCount}, options);
    FAIL() << "expected no-valid-candidate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoValidCandidate);
  }
  // With PPT able to run, the RSC failure stays a row in the report.
  const ComparisonReport r = RunPipeline(M2(), CoverageSpec::EdgePair(PlSetting::kHigh),
                                         SingleCriterion{Criterion::kTCount}, options);
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_TRUE(r.candidates[0].ok());
  EXPECT_FALSE(r.candidates[1].ok());
  EXPECT_FALSE(r.candidates[1].criteria.has_value());
  EXPECT_EQ(r.winners, (std::vector<std::size_t>{0}));
}

TEST(RunPipelineTest, DeterministicAndThreadIndependent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomModelParams p{10 + static_cast<int>(seed), 1.3, 0.25, 0.2, 1, 2};
    const SutModel m = GenerateRandomModel(p, seed);
    for (auto cov : {CoverageSpec::Edge(PlSetting::kMedium),
                     CoverageSpec::EdgePair(PlSetting::kNone)}) {
      PipelineOptions serial;
      serial.parallel = false;
      const auto a = RunPipeline(m, cov, WeightedFunction{}, serial);
      const auto b = RunPipeline(m, cov, WeightedFunction{});
      ASSERT_EQ(a.candidates.size(), b.candidates.size());
      for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        EXPECT_EQ(a.candidates[i].test_set, b.candidates[i].test_set);
        EXPECT_EQ(a.candidates[i].opt_score, b.candidates[i].opt_score);
      }
      EXPECT_EQ(a.winners, b.winners);
    }
  }
}

}  // namespace
}  // namespace pathgen
