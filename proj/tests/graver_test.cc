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

#include "robust_ip/graver.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "robust_ip/instances.h"

namespace robust_ip {
namespace {

std::vector<IntVector> Units(size_t n) {
  std::vector<IntVector> out;
  for (size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraverBasis Basis(const IntMatrix& a, std::vector<IntVector> elems) {
  return GraverBasis(a.cols(), MatrixFingerprint(a), std::move(elems));
}

TEST(GraverBasisTest, StoresCanonicalHalf) {
  const IntMatrix a = IntMatrix::FromRows({{1, -1}});
  const GraverBasis g = Basis(a, {{-1, -1}, {1, 1}});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.elements()[0], (IntVector{1, 1}));
  EXPECT_EQ(g.FullSet(), (std::vector<IntVector>{{-1, -1}, {1, 1}}));
  EXPECT_THROW(Basis(a, {{0, 0}}), ValidationError);
  EXPECT_THROW(Basis(a, {{1}}), DimensionError);
}

TEST(IntegerKernelBasisTest, SpansTheLattice) {
  // Over Q the kernel of (2 4) is spanned by (2, -1); the lattice needs it
  // primitive, not a multiple.
  auto k = IntegerKernelBasis(IntMatrix::FromRows({{2, 4}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(CanonicalSign(k[0]), (IntVector{2, -1}));
  EXPECT_TRUE(IntegerKernelBasis(IntMatrix::Identity(3)).empty());
  EXPECT_EQ(IntegerKernelBasis(IntMatrix(2, 3)).size(), 3u);
  const IntMatrix a = IntMatrix::FromRows({{1, 2, 3, 4}, {2, 0, -1, 3}});
  for (const auto& v : IntegerKernelBasis(a)) {
    EXPECT_TRUE(IsZero(a.Multiply(v)));
  }
  EXPECT_EQ(IntegerKernelBasis(a).size(), 2u);
}

TEST(ComputeGraverTest, ZeroMatrixGivesUnitVectors) {
  for (size_t n = 1; n <= 5; ++n) {
    const IntMatrix zero(1, n + 1);
    EXPECT_EQ(ComputeGraver(zero).elements(), Units(n + 1)) << "n = " << n;
  }
}

TEST(ComputeGraverTest, PartitionMaxMinMatrix) {
  // A = (I_4 | (6; -2a)) for a = (1, 2, 3); basis +-(-6, 2, 4, 6, 1).
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  const GraverBasis g = ComputeGraver(inst.set.a());
  EXPECT_EQ(g.elements(), (std::vector<IntVector>{{6, -2, -4, -6, -1}}));
  EXPECT_EQ(g, inst.known_graver);
}

TEST(ComputeGraverTest, SmallExamples) {
  EXPECT_EQ(ComputeGraver(IntMatrix::FromRows({{1, -1}})).elements(),
            (std::vector<IntVector>{{1, 1}}));
  EXPECT_TRUE(ComputeGraver(IntMatrix::Identity(3)).elements().empty());
  // Circuits of (1 1 1) plus nothing else.
  EXPECT_EQ(ComputeGraver(IntMatrix::FromRows({{1, 1, 1}})).elements(),
            (std::vector<IntVector>{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}}));
  // (1, -1, 1) is primitive for (1 2 1) but not a circuit.
  const auto g = ComputeGraver(IntMatrix::FromRows({{1, 2, 1}}));
  EXPECT_NE(std::find(g.elements().begin(), g.elements().end(),
                      IntVector{1, -1, 1}),
            g.elements().end());
  EXPECT_THROW(ComputeGraver(IntMatrix(1, 0)), ValidationError);
}

TEST(ComputeGraverTest, ResourceCapsAreReported) {
  const IntMatrix a = IntMatrix::FromRows({{1, 2, 3, 5}});
  GraverLimits tiny;
  tiny.max_elements = 4;
  EXPECT_THROW(ComputeGraver(a, tiny), ResourceLimitError);
  GraverLimits few_pairs;
  few_pairs.max_pair_operations = 3;
  EXPECT_THROW(ComputeGraver(a, few_pairs), ResourceLimitError);
}

TEST(ComputeGraverTest, MatchesBruteForceOnRandomMatrices) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const size_t rows = 1 + seed % 2;
    const size_t cols = 2 + seed % 3;
    const IntMatrix a = GenRandomMatrix(rows, cols, -3, 3, seed);
    const GraverBasis g = ComputeGraver(a);
    Int radius = 1;
    for (const auto& e : g.elements()) radius = std::max(radius, MaxAbs(e));
    EXPECT_EQ(g.elements(), BruteForceGraver(a, radius)) << "seed " << seed;
    for (const auto& e : g.elements()) {
      EXPECT_TRUE(IsZero(a.Multiply(e)));
      EXPECT_EQ(CanonicalSign(e), e);
    }
    const auto full = g.FullSet();
    for (size_t i = 0; i < full.size(); ++i) {
      for (size_t j = 0; j < full.size(); ++j) {
        if (i != j) EXPECT_FALSE(ConformalLeq(full[i], full[j]));
      }
    }
  }
}

TEST(ComputeGraverTest, InvariantUnderRowPermutation) {
  std::mt19937_64 rng(4);
  for (uint64_t seed = 100; seed < 115; ++seed) {
    const IntMatrix a = GenRandomMatrix(3, 5, -2, 2, seed);
    std::vector<size_t> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(ComputeGraver(a).elements(),
              ComputeGraver(a.PermuteRows(perm)).elements());
  }
}

TEST(BruteForceGraverTest, Examples) {
  EXPECT_EQ(BruteForceGraver(IntMatrix::FromRows({{1, 1}}), 3),
            (std::vector<IntVector>{{1, -1}}));
  EXPECT_EQ(BruteForceGraver(IntMatrix(1, 2), 1), Units(2));
  EXPECT_EQ(BruteForceGraver(IntMatrix::FromRows({{2, -2}}), 2),
            (std::vector<IntVector>{{1, 1}}));
  EXPECT_THROW(BruteForceGraver(IntMatrix(1, 6), 3, 100), ResourceLimitError);
  EXPECT_THROW(BruteForceGraver(IntMatrix(1, 2), 0), ValidationError);
}

TEST(VerifyGraverTest, AcceptsTrueBases) {
  const IntMatrix zero(1, 3);
  EXPECT_TRUE(VerifyGraver(zero, Basis(zero, Units(3)), 4).passed());
  const auto inst = GenPartitionMaxMin(IntVector{1, 2, 3});
  EXPECT_TRUE(VerifyGraver(inst.set.a(), inst.known_graver, 6).passed());
}

TEST(VerifyGraverTest, RejectsNonMinimalBasis) {
  const IntMatrix a = IntMatrix::FromRows({{1, -1}});
  const auto report = VerifyGraver(a, Basis(a, {{2, 2}}), 3);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.Find("kernel").passed);
  EXPECT_FALSE(report.Find("irreducibility").passed);
  EXPECT_EQ(report.Find("irreducibility").counterexample.front(),
            (IntVector{1, 1}));
  EXPECT_FALSE(report.Find("completeness").passed);
  EXPECT_EQ(report.Find("completeness").counterexample.front(),
            (IntVector{1, 1}));

  const auto both = VerifyGraver(a, Basis(a, {{1, 1}, {2, 2}}), 3);
  EXPECT_FALSE(both.Find("minimality").passed);
  ASSERT_EQ(both.Find("minimality").counterexample.size(), 2u);
  EXPECT_TRUE(both.Find("completeness").passed);
}

TEST(VerifyGraverTest, RejectsNonKernelElements) {
  const IntMatrix a = IntMatrix::FromRows({{1, -1}});
  const auto report = VerifyGraver(a, Basis(a, {{1, 1}, {1, 0}}), 2);
  EXPECT_FALSE(report.Find("kernel").passed);
  EXPECT_THROW(VerifyGraver(a, Basis(IntMatrix(1, 3), Units(3)), 2),
               DimensionError);
}

TEST(NFoldProductTest, Examples) {
  const IntMatrix a1 = IntMatrix::FromRows({{1, 1}});
  const IntMatrix a2 = IntMatrix::FromRows({{1, -1}});
  EXPECT_EQ(NFoldProduct(a1, a2, 2),
            IntMatrix::FromRows({{1, 1, 1, 1}, {1, -1, 0, 0}, {0, 0, 1, -1}}));
  EXPECT_EQ(NFoldProduct(a1, a2, 1), IntMatrix::FromRows({{1, 1}, {1, -1}}));
  const IntMatrix one = IntMatrix::FromRows({{1}});
  EXPECT_EQ(NFoldProduct(one, one, 3),
            IntMatrix::FromRows({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(NFoldProduct(a1, one, 2), DimensionError);
  EXPECT_THROW(NFoldProduct(a1, a2, 0), ValidationError);
}

TEST(NFoldProductTest, ShapeAndNonzeroCount) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const size_t r = seed % 3, s = 1 + seed % 2, t = 1 + seed % 4;
    const size_t n = 1 + seed % 4;
    const IntMatrix a1 = GenRandomMatrix(r, t, -2, 2, seed);
    const IntMatrix a2 = GenRandomMatrix(s, t, -2, 2, seed + 1000);
    const IntMatrix p = NFoldProduct(a1, a2, n);
    EXPECT_EQ(p.rows(), r + n * s);
    EXPECT_EQ(p.cols(), n * t);
    EXPECT_EQ(p.CountNonzeros(),
              n * a1.CountNonzeros() + n * a2.CountNonzeros());
  }
}

TEST(MatrixFingerprintTest, DependsOnShapeAndEntries) {
  EXPECT_EQ(MatrixFingerprint(IntMatrix(1, 2)).size(), 64u);
  EXPECT_NE(MatrixFingerprint(IntMatrix(1, 2)), MatrixFingerprint(IntMatrix(2, 1)));
  EXPECT_NE(MatrixFingerprint(IntMatrix::FromRows({{1, 2}})),
            MatrixFingerprint(IntMatrix::FromRows({{2, 1}})));
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace robust_ip
