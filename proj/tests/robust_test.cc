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

#include "robust_ip/robust.h"

#include "gtest/gtest.h"
#include "oracles.h"
#include "robust_ip/instances.h"

namespace robust_ip {
namespace {

using namespace testing;  // NOLINT

StandardFormSet Interval(Int lo, Int hi) {
  return StandardFormSet(IntMatrix(0, 1), {}, {lo}, {hi});
}

GraverBasis UnitBasis(size_t n, const IntMatrix& a) {
  std::vector<IntVector> elems;
  for (size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    elems.push_back(e);
  }
  return GraverBasis(n, MatrixFingerprint(a), elems);
}

void ExpectConsistent(const RobustReport& r, const StandardFormSet& set,
                      const CostModel& costs) {
  const CheckResult c = CheckWitnessConsistency(r, set, costs);
  EXPECT_TRUE(c.passed) << c.detail;
}

TEST(VariantNameTest, RoundTrips) {
  for (auto v : {RobustVariant::kMinMaxList, RobustVariant::kMinMaxBox,
                 RobustVariant::kMaxMinList, RobustVariant::kMaxMinBox}) {
    EXPECT_EQ(ParseVariant(VariantName(v)), v);
  }
  EXPECT_EQ(VariantName(RobustVariant::kMinMaxBox), "minmax-box");
  EXPECT_THROW(ParseVariant("minmax"), ValidationError);
  EXPECT_EQ(ParseMethod(MethodName(SolveMethod::kGraver)), SolveMethod::kGraver);
}

TEST(MinMaxBoxTest, Interval) {
  const auto set = Interval(-2, 3);
  const auto basis = UnitBasis(1, set.a());
  const auto r = MinMaxBox(set, basis, IntVector{-1}, IntVector{2});
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.optimizer, (IntVector{0}));
  EXPECT_EQ(r.witness, (IntVector{2}));
  EXPECT_EQ(r.method, SolveMethod::kGraver);
  ExpectConsistent(r, set, CostModel::Box({-1}, {2}));
}

TEST(MinMaxBoxTest, DegenerateBoxIsLinear) {
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  const IntVector c = {1, 1, 0, 1, 0};
  const auto r = MinMaxBox(inst.set, inst.known_graver, c, c);
  EXPECT_EQ(r.value.value(), MinMax(NaivePoints(inst.set), {c}));
  EXPECT_EQ(r.witness, c);
}

TEST(MinMaxBoxTest, WitnessUsesSignOfDecision) {
  const auto set = Interval(-3, -1);
  const auto r = MinMaxBox(set, UnitBasis(1, set.a()), IntVector{1},
                           IntVector{4});
  // f(x) = max(x, 4x) = x for x < 0; minimum -3 with c = d.
  EXPECT_EQ(r.value, -3);
  EXPECT_EQ(r.witness, (IntVector{1}));
}

TEST(MaxMinListTest, SingletonIsLinear) {
  const auto inst = GenPartitionMaxMin(IntVector{2, 3});
  const IntVector c = {1, 0, 1, 0};
  const auto r = MaxMinList(inst.set, inst.known_graver, {c});
  EXPECT_EQ(r.value.value(), MaxMin(NaivePoints(inst.set), {c}));
  EXPECT_EQ(r.optimizer, c);
  EXPECT_EQ(r.inner_solves, 1u);
}

TEST(MaxMinListTest, ExtremeBoxRowsOfPartitionInstance) {
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  const std::vector<IntVector> costs = {inst.costs.lower(),
                                        inst.costs.upper()};
  const auto r = MaxMinList(inst.set, inst.known_graver, costs);
  EXPECT_EQ(r.value.value(), MaxMin(NaivePoints(inst.set), costs));
  // Both extreme rows give -6, below -a0/2 = -3.
  EXPECT_EQ(r.value, -6);
  EXPECT_EQ(r.optimizer, costs[0]);
}

TEST(MaxMinListTest, TiesGoToFirstCost) {
  const auto set = Interval(0, 2);
  const auto r =
      MaxMinList(set, UnitBasis(1, set.a()), {{3}, {1}, {0}, {5}});
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.optimizer, (IntVector{3}));
}

TEST(MinMaxListExactTest, Partition) {
  const auto yes = GenPartitionMinMax(IntVector{1, 2, 3});
  const auto r = MinMaxListExact(yes.set, yes.costs.list());
  EXPECT_EQ(r.value, 3);
  EXPECT_TRUE(yes.threshold == r.value);
  EXPECT_EQ(r.enumerated_points, 8u);
  EXPECT_EQ(r.method, SolveMethod::kExactEnumeration);
  ExpectConsistent(r, yes.set, yes.costs);

  const auto no = GenPartitionMinMax(IntVector{2, 3, 4});
  const auto s = MinMaxListExact(no.set, no.costs.list());
  EXPECT_EQ(s.value, 5);
  EXPECT_FALSE(no.threshold == s.value);

  EXPECT_EQ(MinMaxListExact(GenPartitionMinMax(IntVector{1}).set,
                            GenPartitionMinMax(IntVector{1}).costs.list())
                .value,
            1);
  const auto five = GenPartitionMinMax(IntVector{5, 5});
  EXPECT_EQ(MinMaxListExact(five.set, five.costs.list()).value, 5);
}

TEST(MinMaxListExactTest, SingleCostAndCaps) {
  const auto inst = GenPartitionMinMax(IntVector{1, 2, 3});
  const IntVector c = {0, -1, 2, -3};
  EXPECT_EQ(MinMaxListExact(inst.set, {c}).value.value(),
            MinMax(NaivePoints(inst.set), {c}));
  RobustOptions small;
  small.max_points = 7;
  EXPECT_THROW(MinMaxListExact(inst.set, inst.costs.list(), small),
               ResourceLimitError);
  const StandardFormSet empty(IntMatrix::FromRows({{0}}), {1}, {0}, {1});
  EXPECT_THROW(MinMaxListExact(empty, {{1}}), InfeasibleError);
}

TEST(MaxMinBoxExactTest, Partition) {
  const auto yes = GenPartitionMaxMin(IntVector{1, 2, 3});
  const auto r = MaxMinBoxExact(yes.set, yes.known_graver, yes.costs.lower(),
                                yes.costs.upper());
  EXPECT_EQ(r.value, -3);
  EXPECT_TRUE(yes.threshold == r.value);
  EXPECT_EQ(r.inner_solves, 8u);
  ExpectConsistent(r, yes.set, yes.costs);

  const auto ones = GenPartitionMaxMin(IntVector{1, 1, 1});
  EXPECT_EQ(MaxMinBoxExact(ones.set, ones.known_graver, ones.costs.lower(),
                           ones.costs.upper())
                .value,
            -2);
  const auto fives = GenPartitionMaxMin(IntVector{5, 5});
  EXPECT_EQ(MaxMinBoxExact(fives.set, fives.known_graver,
                           fives.costs.lower(), fives.costs.upper())
                .value,
            -5);
  const auto no = GenPartitionMaxMin(IntVector{2, 3, 4});
  EXPECT_LE(MaxMinBoxExact(no.set, no.known_graver, no.costs.lower(),
                           no.costs.upper())
                .value,
            -5);
}

TEST(MaxMinBoxExactTest, DegenerateBoxAndCap) {
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  const IntVector c = {1, 0, 1, 1, 0};
  EXPECT_EQ(MaxMinBoxExact(inst.set, inst.known_graver, c, c).value.value(),
            MaxMin(NaivePoints(inst.set), {c}));
  RobustOptions small;
  small.max_box_volume = 7;
  EXPECT_THROW(MaxMinBoxExact(inst.set, inst.known_graver, inst.costs.lower(),
                              inst.costs.upper(), small),
               ResourceLimitError);
}

TEST(SolveRobustTest, ValidatesVariantAndBasis) {
  const auto inst = GenPartitionMinMax(IntVector{1, 2});
  EXPECT_THROW(SolveRobust(RobustVariant::kMinMaxBox, inst.set, inst.costs,
                           &inst.known_graver),
               ValidationError);
  EXPECT_THROW(
      SolveRobust(RobustVariant::kMaxMinList, inst.set, inst.costs, nullptr),
      ValidationError);
  EXPECT_EQ(SolveRobust(RobustVariant::kMinMaxList, inst.set, inst.costs,
                        nullptr)
                .value,
            2);
}

// Random instances with both a box and the list of its vertices.
struct Case {
  RandomInstance inst;
  GraverBasis basis;
  std::vector<IntVector> points;
};

Case MakeCase(uint64_t seed) {
  RandomParams p;
  p.rows = 1 + seed % 2;
  p.cols = 2 + seed % 4;
  p.box_width = 3;
  const auto inst = GenRandom(p, seed);
  return {inst, ComputeGraver(inst.set.a()), NaivePoints(inst.set)};
}

TEST(RobustPropertiesTest, BoxVertexReductionAndWeakDuality) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Case c = MakeCase(seed);
    const auto& d = c.inst.costs.lower();
    const auto& e = c.inst.costs.upper();
    const auto vertices = BoxVertices(d, e);
    const auto box = MinMaxBox(c.inst.set, c.basis, d, e);
    EXPECT_EQ(box.value.value(), MinMax(c.points, vertices)) << seed;
    EXPECT_EQ(box.value, MinMaxListExact(c.inst.set, vertices).value) << seed;
    ExpectConsistent(box, c.inst.set, c.inst.costs);
    EXPECT_TRUE(
        CheckGraverCertificate(box, c.inst.set, c.inst.costs, c.basis).passed);

    const auto maxmin = MaxMinBoxExact(c.inst.set, c.basis, d, e);
    EXPECT_EQ(maxmin.value.value(), MaxMin(c.points, BoxPoints(d, e))) << seed;
    EXPECT_LE(maxmin.value, box.value);
    ExpectConsistent(maxmin, c.inst.set, c.inst.costs);

    const auto list = CostModel::List(vertices);
    const auto mml = MaxMinList(c.inst.set, c.basis, vertices);
    EXPECT_EQ(mml.value.value(), MaxMin(c.points, vertices)) << seed;
    EXPECT_LE(mml.value, box.value);
    ExpectConsistent(mml, c.inst.set, list);
    EXPECT_TRUE(CheckGraverCertificate(mml, c.inst.set, list, c.basis).passed);
  }
}

TEST(RobustPropertiesTest, PartitionIff) {
  const std::vector<IntVector> as = {
      {1}, {2, 2}, {1, 2, 3}, {2, 3, 4}, {3, 1, 1, 2}, {1, 1, 1}, {4, 5, 9}};
  for (const auto& a : as) {
    const bool yes = HasEqualPartition(a);
    const auto mm = GenPartitionMinMax(a);
    EXPECT_EQ(mm.threshold == MinMaxListExact(mm.set, mm.costs.list()).value,
              yes);
    const auto mx = GenPartitionMaxMin(a);
    EXPECT_EQ(mx.threshold == MaxMinBoxExact(mx.set, mx.known_graver,
                                             mx.costs.lower(),
                                             mx.costs.upper())
                                  .value,
              yes);
  }
}

TEST(WitnessConsistencyTest, DetectsTampering) {
  const auto inst = GenPartitionMinMax(IntVector{1, 2, 3});
  auto r = MinMaxListExact(inst.set, inst.costs.list());
  r.value = r.value + 1;
  EXPECT_FALSE(CheckWitnessConsistency(r, inst.set, inst.costs).passed);
  r.value = r.value - 1;
  r.witness = IntVector{1, 1, 1, 1};
  EXPECT_FALSE(CheckWitnessConsistency(r, inst.set, inst.costs).passed);
  r = MinMaxListExact(inst.set, inst.costs.list());
  r.optimizer = IntVector{1, 2, 0, 0};
  EXPECT_FALSE(CheckWitnessConsistency(r, inst.set, inst.costs).passed);
}

TEST(GraverCertificateTest, DetectsSuboptimalDecision) {
  const auto set = Interval(-2, 3);
  const auto basis = UnitBasis(1, set.a());
  const auto costs = CostModel::Box({-1}, {2});
  auto r = MinMaxBox(set, basis, costs.lower(), costs.upper());
  r.optimizer = IntVector{1};
  r.value = 2;
  EXPECT_TRUE(CheckWitnessConsistency(r, set, costs).passed);
  EXPECT_FALSE(CheckGraverCertificate(r, set, costs, basis).passed);
}

TEST(DualProfitTest, Examples) {
  const auto set = Interval(-2, 3);
  const auto basis = UnitBasis(1, set.a());
  const auto single = DualProfitVariant(ProfitVariant::kMaxMin, set,
                                        CostModel::List({{2}}), &basis);
  EXPECT_EQ(single.value, 6);

  const StandardFormSet cube(IntMatrix(0, 3), {}, {0, 0, 0}, {1, 1, 1});
  const auto cube_basis = UnitBasis(3, cube.a());
  const auto box = DualProfitVariant(ProfitVariant::kMaxMin, cube,
                                     CostModel::Box({1, 1, 1}, {1, 1, 1}),
                                     &cube_basis);
  EXPECT_EQ(box.value, 3);
  EXPECT_EQ(box.optimizer, (IntVector{1, 1, 1}));
}

TEST(DualProfitTest, IdentitiesAgainstDoubleEnumeration) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Case c = MakeCase(seed + 500);
    const auto& d = c.inst.costs.lower();
    const auto& e = c.inst.costs.upper();
    const auto box_costs = BoxPoints(d, e);
    const std::vector<IntVector> list = {d, e, BoxVertices(d, e).back()};
    for (const CostModel& model :
         {CostModel::Box(d, e), CostModel::List(list)}) {
      const auto all = CostsOf(model);
      const auto maxmin = DualProfitVariant(ProfitVariant::kMaxMin, c.inst.set,
                                            model, &c.basis);
      EXPECT_EQ(maxmin.value.value(), MaxOverPointsMinOverCosts(c.points, all));
      EXPECT_EQ(maxmin.value, -maxmin.negated.value);
      const auto minmax = DualProfitVariant(ProfitVariant::kMinMax, c.inst.set,
                                            model, &c.basis);
      EXPECT_EQ(minmax.value.value(), MinOverCostsMaxOverPoints(c.points, all));
      EXPECT_TRUE(model.Contains(minmax.optimizer));
      EXPECT_EQ(Dot(minmax.optimizer, minmax.witness), minmax.value);
      EXPECT_EQ(Dot(maxmin.witness, maxmin.optimizer), maxmin.value);
    }
  }
}

}  // namespace
}  // namespace robust_ip
