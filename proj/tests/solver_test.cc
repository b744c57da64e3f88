// Copyright 2026 The robust_ip Authors
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

#include "robust_ip/solver.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "oracles.h"
#include "robust_ip/instances.h"

namespace robust_ip {
namespace {

using testing::Dot64;
using testing::NaivePoints;

StandardFormSet Interval(Int lo, Int hi) {
  return StandardFormSet(IntMatrix(0, 1), {}, {lo}, {hi});
}

GraverBasis UnitBasis(const StandardFormSet& set) {
  std::vector<IntVector> elems;
  for (size_t i = 0; i < set.num_vars(); ++i) {
    IntVector e(set.num_vars());
    e[i] = 1;
    elems.push_back(e);
  }
  return GraverBasis(set.num_vars(), MatrixFingerprint(set.a()), elems);
}

int64_t NaiveMin(const StandardFormSet& set, const SeparableConvexObjective& f) {
  int64_t best = INT64_MAX;
  for (const auto& x : NaivePoints(set)) {
    best = std::min(best, EvalObjective(f, x).value());
  }
  return best;
}

TEST(EnumerateFeasibleTest, Examples) {
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  EXPECT_EQ(EnumerateFeasible(inst.set, 100),
            (std::vector<IntVector>{{-6, 1, 2, 3, 1}, {0, -1, -2, -3, 0}}));

  const StandardFormSet contradictory(IntMatrix::FromRows({{0, 0}}), {1},
                                      {0, 0}, {1, 1});
  EXPECT_TRUE(EnumerateFeasible(contradictory, 10).empty());

  const auto minmax = GenPartitionMinMax(IntVector{4, 7});
  EXPECT_EQ(EnumerateFeasible(minmax.set, 10).size(), 4u);
  EXPECT_THROW(EnumerateFeasible(minmax.set, 3), ResourceLimitError);
  EXPECT_THROW(EnumerateFeasible(minmax.set, 0), ValidationError);
}

TEST(EnumerateFeasibleTest, MatchesNaiveScan) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    RandomParams p;
    p.rows = 1 + seed % 3;
    p.cols = 2 + seed % 4;
    const auto inst = GenRandom(p, seed);
    EXPECT_EQ(EnumerateFeasible(inst.set, 5000), NaivePoints(inst.set))
        << "seed " << seed;
  }
}

TEST(FindFeasibleTest, Examples) {
  const auto inst = GenPartitionMinMax(IntVector{1, 2});
  const IntVector hint = {1, 1, 0};
  EXPECT_EQ(FindFeasible(inst.set, hint), hint);
  EXPECT_EQ(FindFeasible(inst.set, std::nullopt), (IntVector{1, 0, 0}));
  EXPECT_EQ(FindFeasible(inst.set, IntVector{0, 0, 0}), (IntVector{1, 0, 0}));
  const StandardFormSet contradictory(IntMatrix::FromRows({{0}}), {1}, {0},
                                      {1});
  EXPECT_EQ(FindFeasible(contradictory, std::nullopt), std::nullopt);
}

TEST(MaxStrideTest, IsTheLargestFeasibleStep) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    RandomParams p;
    p.rows = 1;
    p.cols = 3;
    const auto inst = GenRandom(p, seed);
    const GraverBasis g = ComputeGraver(inst.set.a());
    const auto points = NaivePoints(inst.set);
    for (const auto& x : points) {
      for (const auto& dir : g.FullSet()) {
        const Int lambda = MaxStride(inst.set, x, dir);
        ASSERT_GE(lambda, 0);
        EXPECT_TRUE(IsMember(inst.set, AddScaled(x, lambda, dir)));
        EXPECT_FALSE(IsMember(inst.set, AddScaled(x, lambda + 1, dir)));
      }
    }
  }
}

TEST(MinimizeTest, WalksToLowerBound) {
  const auto set = Interval(-2, 3);
  const auto trace = MinimizeLinear(set, UnitBasis(set), IntVector{1},
                                    IntVector{3});
  EXPECT_EQ(trace.final_point, (IntVector{-2}));
  EXPECT_EQ(trace.final_value, -2);
  EXPECT_EQ(trace.termination, Termination::kOptimal);

  const auto up = MinimizeLinear(set, UnitBasis(set), IntVector{-1},
                                 IntVector{-2});
  EXPECT_EQ(up.final_point, (IntVector{3}));
  EXPECT_EQ(up.final_value, -3);
}

TEST(MinimizeTest, BoxObjectiveOnInterval) {
  const auto set = Interval(-2, 3);
  const auto f = BoxObjective(IntVector{-1}, IntVector{2});
  const auto trace = MinimizeSeparableConvex(set, UnitBasis(set), f,
                                             IntVector{3});
  EXPECT_EQ(trace.final_point, (IntVector{0}));
  EXPECT_EQ(trace.final_value, 0);
}

TEST(MinimizeTest, PartitionMaxMinStaysAtOptimum) {
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  const IntVector start = {0, -1, -2, -3, 0};
  const auto trace = MinimizeLinear(inst.set, inst.known_graver,
                                    IntVector{1, 1, 1, 1, 0}, start);
  EXPECT_EQ(trace.final_point, start);
  EXPECT_EQ(trace.final_value, -6);
  EXPECT_TRUE(trace.steps.empty());
}

TEST(MinimizeTest, ZeroCostKeepsStart) {
  const auto inst = GenPartitionMaxMin(IntVector{2, 2});
  const IntVector start = {-4, 2, 2, 1};
  const auto trace = MinimizeLinear(inst.set, inst.known_graver,
                                    IntVector(4), start);
  EXPECT_EQ(trace.final_point, start);
  EXPECT_EQ(trace.final_value, 0);
}

TEST(MinimizeTest, RejectsBadInputs) {
  const auto set = Interval(-2, 3);
  EXPECT_THROW(MinimizeLinear(set, UnitBasis(set), IntVector{1}, IntVector{4}),
               ValidationError);
  const StandardFormSet other(IntMatrix::FromRows({{1}}), {0}, {-1}, {1});
  EXPECT_THROW(
      MinimizeLinear(other, UnitBasis(set), IntVector{1}, IntVector{0}),
      ValidationError);
}

TEST(MinimizeTest, IterationCapIsReported) {
  const auto set = Interval(0, 10);
  // The unit step is the only direction and the objective is nonlinear
  // enough that one step cannot reach the optimum from 10.
  const SeparableConvexObjective f({{{1, 0}, {-1, 0}}});
  AugmentationLimits limits;
  limits.max_iterations = 0;
  const auto trace =
      MinimizeSeparableConvex(set, UnitBasis(set), f, IntVector{10}, limits);
  EXPECT_EQ(trace.termination, Termination::kIterationCap);
}

TEST(MinimizeTest, MatchesEnumerationOracle) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    RandomParams p;
    p.rows = 1 + seed % 2;
    p.cols = 2 + seed % 4;
    p.bound_width = 2 + seed % 2;
    const auto inst = GenRandom(p, seed);
    const GraverBasis g = ComputeGraver(inst.set.a());
    const auto& d = inst.costs.lower();
    const auto& e = inst.costs.upper();
    const auto f = BoxObjective(d, e);
    const auto trace =
        MinimizeSeparableConvex(inst.set, g, f, inst.reference_point);
    EXPECT_EQ(trace.final_value.value(), NaiveMin(inst.set, f))
        << "seed " << seed;
    // Strict decrease, feasibility along the trace, and the certificate.
    IntVector x = trace.initial_point;
    Int prev = trace.initial_value;
    for (const auto& step : trace.steps) {
      x = AddScaled(x, step.step, step.direction);
      EXPECT_TRUE(IsMember(inst.set, x));
      EXPECT_EQ(EvalObjective(f, x), step.value);
      EXPECT_LT(step.value, prev);
      prev = step.value;
    }
    EXPECT_EQ(x, trace.final_point);
    EXPECT_EQ(FindImprovingDirection(inst.set, g, f, trace.final_point),
              std::nullopt);

    const auto lin = MinimizeLinear(inst.set, g, d, inst.reference_point);
    int64_t best = INT64_MAX;
    for (const auto& y : NaivePoints(inst.set)) best = std::min(best, Dot64(d, y));
    EXPECT_EQ(lin.final_value.value(), best) << "seed " << seed;
  }
}

TEST(MinimizeTest, TernarySearchFindsBestStep) {
  // Single direction, long stride, minimum in the interior of [1, 40].
  const auto set = Interval(0, 40);
  for (int target = 0; target <= 40; target += 7) {
    const SeparableConvexObjective f(
        {{{1, -target}, {-1, target}}});  // |x - target|
    const auto trace =
        MinimizeSeparableConvex(set, UnitBasis(set), f, IntVector{0});
    EXPECT_EQ(trace.final_point, (IntVector{target}));
    EXPECT_LE(trace.steps.size(), 1u);
  }
}

}  // namespace
}  // namespace robust_ip
