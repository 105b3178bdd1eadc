// Copyright 2026 The moqp Authors
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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "moqp/errors.hpp"
#include "moqp/fixtures.hpp"
#include "moqp/report.hpp"
#include "moqp/sweep.hpp"
#include "moqp/weights.hpp"
#include "test_util.hpp"

namespace moqp {
namespace {

using ::moqp::testing::Ex51TableWeights;
using ::moqp::testing::Ex52TableWeights;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::StartsWith;

std::vector<WeightVector> ToWeights(const std::vector<Vector>& rows) {
  std::vector<WeightVector> out;
  for (const Vector& r : rows) out.emplace_back(r);
  return out;
}

void ExpectSimplexWithLastPositive(const WeightVector& w) {
  double sum = 0.0;
  for (double v : w.values()) {
    EXPECT_GE(v, 0.0);
    sum += v;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_GT(w[w.size() - 1], 0.0);
}

TEST(GenWeightsPaperTest, SingleObjective) {
  EXPECT_THAT(GenWeightsPaper(1, 0).values(), ElementsAre(1.0));
  EXPECT_THAT(GenWeightsPaper(1, 12345).values(), ElementsAre(1.0));
  EXPECT_THROW(GenWeightsPaper(0, 1), InputError);
}

TEST(GenWeightsPaperTest, FixedSeedIsReproducible) {
  const WeightVector a = GenWeightsPaper(4, 2026);
  ExpectSimplexWithLastPositive(a);
  EXPECT_EQ(a, GenWeightsPaper(4, 2026));
}

TEST(GenWeightsPaperTest, MatchesDocumentedStream) {
  // Rejection loop re-coded against the raw engine.
  for (std::uint64_t seed : {0ull, 1ull, 99ull, 31337ull}) {
    std::mt19937_64 engine(seed);
    Vector lambda(3);
    for (;;) {
      double s = 0.0;
      for (int i = 0; i < 2; ++i) {
        lambda[i] = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        s += lambda[i];
      }
      if (s < 1.0) {
        lambda[2] = 1.0 - s;
        break;
      }
    }
    EXPECT_EQ(GenWeightsPaper(3, seed).values(), lambda) << seed;
  }
}

TEST(GenWeightsPaperTest, ThousandDrawsSatisfyInvariants) {
  WeightSampler sampler(7);
  for (int i = 0; i < 1000; ++i) ExpectSimplexWithLastPositive(sampler.Draw(4));
}

TEST(GenWeightsGridTest, Enumerations) {
  std::vector<Vector> p2;
  for (const WeightVector& w : GenWeightsGrid(2, 2)) p2.push_back(w.values());
  EXPECT_THAT(p2, ElementsAre(Vector{0.0, 1.0}, Vector{0.5, 0.5}, Vector{1.0, 0.0}));
  std::vector<Vector> p3;
  for (const WeightVector& w : GenWeightsGrid(3, 1)) p3.push_back(w.values());
  EXPECT_THAT(p3, ElementsAre(Vector{0, 0, 1}, Vector{0, 1, 0}, Vector{1, 0, 0}));
  const std::vector<WeightVector> p4 = GenWeightsGrid(4, 10);
  EXPECT_EQ(p4.size(), 286u);
  EXPECT_EQ(SimplexLatticeCount(4, 10), 286u);
  for (const WeightVector& w : p4) {
    double sum = 0.0;
    for (double v : w.values()) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(GenWeightsGridTest, SizeGuard) {
  EXPECT_EQ(SimplexLatticeCount(3, 1412), 998991u);
  EXPECT_EQ(SimplexLatticeCount(3, 1413), 1000405u);
  EXPECT_THROW(GenWeightsGrid(3, 1413), SizeError);
  EXPECT_THROW(GenWeightsGrid(10, 100), SizeError);
  EXPECT_EQ(SimplexLatticeCount(200, 200000), UINT64_MAX);
  EXPECT_THROW(GenWeightsGrid(3, 0), InputError);
}

TEST(SweepTest, Ex51TableWeightsAllExact) {
  const MoqpInstance inst = fixtures::Load("ex51");
  const std::vector<SweepRecord> records = Sweep(inst, ToWeights(Ex51TableWeights()), {});
  ASSERT_EQ(records.size(), 9u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_FALSE(records[i].error.has_value());
    EXPECT_TRUE(records[i].result.exact) << "row " << i + 1;
    EXPECT_EQ(records[i].weight.values(), WeightVector(Ex51TableWeights()[i]).values());
    EXPECT_EQ(records[i].per_objective, EvaluateObjectives(inst, records[i].result.x));
  }
}

TEST(SweepTest, Ex52TableWeightsAllExact) {
  const std::vector<SweepRecord> records =
      Sweep(fixtures::Load("ex52"), ToWeights(Ex52TableWeights()), {});
  ASSERT_EQ(records.size(), 7u);
  for (const SweepRecord& r : records) EXPECT_TRUE(r.result.exact);
}

TEST(SweepTest, EmptyWeightList) {
  EXPECT_TRUE(Sweep(fixtures::Load("ex51"), {}, {}).empty());
}

TEST(SweepTest, ParallelMatchesSerial) {
  const MoqpInstance inst = fixtures::Load("ex52");
  const std::vector<WeightVector> weights = GenWeightsGrid(5, 3);
  EXPECT_EQ(Sweep(inst, weights, {}), SweepSerial(inst, weights, {}));
}

TEST(SweepTest, FailuresAreRecordedNotThrown) {
  const MoqpInstance inst = fixtures::Load("ex51");
  SolverConfig tight;
  tight.max_iter = 2;
  std::vector<WeightVector> weights = ToWeights(Ex51TableWeights());
  weights.push_back(WeightVector(Vector{0.5, 0.5}));
  const std::vector<SweepRecord> records = Sweep(inst, weights, tight);
  ASSERT_EQ(records.size(), 10u);
  EXPECT_EQ(records[0].result.status, SolveStatus::kMaxIter);
  EXPECT_EQ(records[0].verdict.kind, VerdictKind::kUnverified);
  ASSERT_TRUE(records[9].error.has_value());
  EXPECT_THAT(*records[9].error, StartsWith("input-error"));
}

SweepRecord MakeRecord(Vector f, bool exact) {
  SweepRecord r;
  r.weight = WeightVector(Vector{1.0});
  r.per_objective = std::move(f);
  r.result.exact = exact;
  return r;
}

TEST(FrontierIndicesTest, KeepsNondominatedExactRecords) {
  std::vector<SweepRecord> records = {MakeRecord({1, 3}, true), MakeRecord({2, 2}, true),
                                      MakeRecord({2, 3}, true), MakeRecord({0, 0}, false),
                                      MakeRecord({1, 3}, true)};
  EXPECT_THAT(FrontierIndices(records), ElementsAre(0u, 1u, 4u));
  records.push_back(MakeRecord({0, 0}, true));
  records.back().error = "boom";
  EXPECT_THAT(FrontierIndices(records), ElementsAre(0u, 1u, 4u));
}

TEST(ReportTest, RecordJsonRoundTrip) {
  const MoqpInstance inst = fixtures::Load("ex52");
  std::vector<WeightVector> weights = ToWeights(Ex52TableWeights());
  weights.push_back(WeightVector(Vector{0.5, 0.5}));
  for (const SweepRecord& r : Sweep(inst, weights, {})) {
    const Json doc = RecordToJson(r);
    EXPECT_EQ(RecordFromJson(doc), r);
    EXPECT_EQ(RecordFromJson(Json::parse(doc.dump())), r);
  }
}

TEST(ReportTest, MalformedRecordIsInputError) {
  EXPECT_THROW(RecordFromJson(Json::parse(R"({"weights": [1]})")), InputError);
  EXPECT_THROW(RecordFromJson(Json::parse("[]")), InputError);
}

TEST(ReportTest, DocumentShape) {
  const MoqpInstance inst = fixtures::Load("ex51");
  const std::vector<SweepRecord> records = Sweep(inst, ToWeights(Ex51TableWeights()), {});
  const Json doc = RecordsToJson(inst, records);
  EXPECT_EQ(doc["instance"], "ex51");
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["p"], 4);
  EXPECT_EQ(doc["records"].size(), 9u);
  EXPECT_EQ(doc["records"][1]["verdict"]["kind"], "pareto-optimal");
}

TEST(ReportTest, Csv) {
  const MoqpInstance inst = fixtures::Load("ex51");
  EXPECT_EQ(CsvHeader(inst), "w1,w2,w3,w4,x1,x2,F1,F2,F3,F4,rank1_gap,status,verdict");
  const std::vector<SweepRecord> records =
      Sweep(inst, {WeightVector(Ex51TableWeights()[1])}, {});
  const std::string row = CsvRow(records[0], inst.n(), inst.p());
  EXPECT_THAT(row, StartsWith("0.35,0.1966,0.2511,0.2023,"));
  EXPECT_THAT(row, HasSubstr(",converged,pareto-optimal"));
  std::istringstream lines(RecordsToCsv(inst, records));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 12);
    ++count;
  }
  EXPECT_EQ(count, 2);
}

}  // namespace
}  // namespace moqp
