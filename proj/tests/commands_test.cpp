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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pathgen/commands.hpp"
#include "test_util.hpp"

namespace pathgen {
namespace {

namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::path(::testing::TempDir()) / ("pathgen-" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string Read(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
  }

  fs::path WriteModel(const SutModel& m) {
    const fs::path path = dir_ / (m.name + ".json");
    std::ofstream(path) << SerializeModel(m);
    return path;
  }

  fs::path dir_;
};

std::size_t CountLines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(ParseCoverageTest, Forms) {
  EXPECT_EQ(ParseCoverage("edge", "high"), CoverageSpec::Edge(PlSetting::kHigh));
  EXPECT_EQ(ParseCoverage("edge-pair", "none"), CoverageSpec::EdgePair(PlSetting::kNone));
  EXPECT_EQ(ParseCoverage("tdl:4", "medium"), CoverageSpec::Tdl(4, PlSetting::kMedium));
  EXPECT_EQ(ParseCoverage("prime-path", "none"), CoverageSpec::PrimePath(PlSetting::kNone));
  EXPECT_THROW(ParseCoverage("tdl:2", "none"), Error);
  EXPECT_THROW(ParseCoverage("tdl:x", "none"), Error);
  EXPECT_THROW(ParseCoverage("node", "none"), Error);
  EXPECT_THROW(ParseCoverage("edge", "low"), Error);
}

TEST(ParseSelectTest, Forms) {
  const auto single = std::get<SingleCriterion>(ParseSelect("single:ue_h"));
  EXPECT_EQ(single.criterion, Criterion::kUniqueHighRatio);
  const auto fn = std::get<WeightedFunction>(ParseSelect("opt:0.3,0.4,0.3"));
  EXPECT_DOUBLE_EQ(fn.weights.edges, 0.4);
  const auto seq = std::get<CriteriaSequence>(ParseSelect("seq:tcount,edges,er"));
  EXPECT_EQ(seq.criteria, (std::vector<Criterion>{Criterion::kTCount, Criterion::kEdges,
                                                  Criterion::kEdgeRatio}));
  try {
    ParseSelect("opt:0.5,0.5,0.1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidWeights);
  }
  EXPECT_THROW(ParseSelect("single:bogus"), Error);
  EXPECT_THROW(ParseSelect("opt:0.5,0.5"), Error);
  EXPECT_THROW(ParseSelect("best"), Error);
}

TEST(ExitCodeTest, Mapping) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kMalformedDocument), kExitModel);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kParallelEdgesPresent), kExitModel);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kInvalidWeights), kExitConfig);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kResourceLimitExceeded), kExitPipeline);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNoValidCandidate), kExitPipeline);
}

TEST_F(CommandsTest, GenerateDiamondEdgeHigh) {
  RunConfig cfg;
  cfg.model_path = WriteModel(testing::M1());
  cfg.coverage = CoverageSpec::Edge(PlSetting::kHigh);
  cfg.optimality = SingleCriterion{Criterion::kTCount};
  cfg.out_dir = dir_ / "out";
  std::ostringstream log;
  ASSERT_EQ(RunGenerateCommand(cfg, log), kExitOk) << log.str();
  const std::string csv = Read(cfg.out_dir / "report.csv");
  EXPECT_EQ(CountLines(csv), 10u);  // header, 8 candidates, summary
  EXPECT_EQ(Read(cfg.out_dir / "selected_paths.txt"), "s->a->t\n");
  EXPECT_NE(log.str().find("selected: PPT"), std::string::npos);
}

TEST_F(CommandsTest, GenerateEdgePairMediumWithFunction) {
  RunConfig cfg;
  cfg.model_path = WriteModel(testing::M1());
  cfg.coverage = CoverageSpec::EdgePair(PlSetting::kMedium);
  cfg.optimality = WeightedFunction{{0.3, 0.4, 0.3}};
  cfg.out_dir = dir_ / "out";
  std::ostringstream log;
  ASSERT_EQ(RunGenerateCommand(cfg, log), kExitOk) << log.str();
  const auto rows = ParseCsv(Read(cfg.out_dir / "report.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].algorithm, "PPT");
  EXPECT_EQ(rows[1].algorithm, "RSC");
  EXPECT_TRUE(rows[0].opt_score.has_value());
}

TEST_F(CommandsTest, MissingModelWritesNothing) {
  RunConfig cfg;
  cfg.model_path = dir_ / "absent.json";
  cfg.coverage = CoverageSpec::Edge(PlSetting::kHigh);
  cfg.out_dir = dir_ / "out";
  std::ostringstream log;
  EXPECT_EQ(RunGenerateCommand(cfg, log), kExitIo);
  EXPECT_FALSE(fs::exists(cfg.out_dir));
}

TEST_F(CommandsTest, InvalidModelExitCode) {
  const fs::path path = dir_ / "bad.json";
  std::ofstream(path) << "{\"nodes\": []";
  RunConfig cfg;
  cfg.model_path = path;
  cfg.coverage = CoverageSpec::Edge(PlSetting::kHigh);
  cfg.out_dir = dir_ / "out";
  std::ostringstream log;
  EXPECT_EQ(RunGenerateCommand(cfg, log), kExitModel);
  EXPECT_FALSE(fs::exists(cfg.out_dir));
}

TEST_F(CommandsTest, BenchmarkSingleInstanceAveragesEqualValues) {
  RunConfig cfg;
  cfg.coverage = CoverageSpec::Edge(PlSetting::kHigh);
  cfg.instances = 1;
  cfg.seed = 7;
  cfg.out_dir = dir_ / "bench";
  std::ostringstream log;
  ASSERT_EQ(RunBenchmarkCommand(cfg, log), kExitOk) << log.str();
  const auto rows = ParseCsv(Read(cfg.out_dir / "instances.csv"));
  const std::string averages = Read(cfg.out_dir / "averages.csv");
  std::istringstream lines(averages);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "criterion,PPT,RSC,BF-a,BF-s,SC-a,SC-s,PG-a,PG-s");
  for (Criterion c : kAllCriteria) {
    ASSERT_TRUE(std::getline(lines, line));
    const auto cells = SplitCsvLine(line);
    ASSERT_EQ(cells.size(), 9u);
    EXPECT_EQ(cells[0], CriterionName(c));
    for (std::size_t k = 0; k < 8; ++k) {
      if (!rows[k].criteria) continue;
      EXPECT_EQ(cells[k + 1], FormatFixed(rows[k].criteria->Value(c)));
    }
  }
  EXPECT_FALSE(std::getline(lines, line));
  EXPECT_TRUE(fs::exists(cfg.out_dir / "models" / "instance-1.json"));
}

TEST_F(CommandsTest, BenchmarkIsDeterministic) {
  std::string outputs[2];
  for (int run = 0; run < 2; ++run) {
    RunConfig cfg;
    cfg.coverage = CoverageSpec::Edge(PlSetting::kMedium);
    cfg.optimality = WeightedFunction{};
    cfg.instances = 5;
    cfg.seed = 99;
    cfg.out_dir = dir_ / ("run" + std::to_string(run));
    std::ostringstream log;
    ASSERT_EQ(RunBenchmarkCommand(cfg, log), kExitOk) << log.str();
    outputs[run] = Read(cfg.out_dir / "instances.csv") + Read(cfg.out_dir / "averages.csv") +
                   Read(cfg.out_dir / "models" / "instance-3.json");
  }
  EXPECT_EQ(outputs[0], outputs[1]);
}

TEST_F(CommandsTest, BenchmarkRejectsNonPositiveCount) {
  RunConfig cfg;
  cfg.instances = 0;
  cfg.out_dir = dir_ / "bench";
  std::ostringstream log;
  EXPECT_EQ(RunBenchmarkCommand(cfg, log), kExitConfig);
}

}  // namespace
}  // namespace pathgen
