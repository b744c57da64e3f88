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

#ifndef ROBUST_IP_INSTANCES_H_
#define ROBUST_IP_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "robust_ip/core.h"
#include "robust_ip/graver.h"

namespace robust_ip {

// Exact fraction num / den with den > 0.
struct Rational {
  Int num;
  Int den = 1;

  friend bool operator==(const Rational& r, Int v) { return r.num == v * r.den; }
  std::string ToString() const;
};

// Decision version of PARTITION encoded as list min-max over
// X = { x in Z^{n+1} : 0 x = 0, x_0 = 1, 0 <= x_i <= 1 } with costs
// c1 = (0, a) and c2 = (a0, -a). A point x encodes I(x) = { i : x_i = 1 }
// and the optimum equals a0 / 2 iff a has an equal-sum split.
struct PartitionMinMaxInstance {
  IntVector a;
  Int a0;
  StandardFormSet set;
  CostModel costs;
  GraverBasis known_graver;  // the unit vectors
  Rational threshold;        // a0 / 2
};

PartitionMinMaxInstance GenPartitionMinMax(std::span<const Int> a);

// PARTITION encoded as box max-min. A = (I_{n+1} | (a0; -2a)), b = (0; -a),
// |x_i| <= a0 for i <= n and x_{n+1} in {0, 1}, so X has exactly the two
// points (0, -a, 0) and (-a0, a, 1). Costs range over c_0 = 1, c_i in {0, 1},
// c_{n+1} = 0; a cost encodes I(c) = { i : c_i = 1 } and the optimum equals
// -a0 / 2 iff a has an equal-sum split.
struct PartitionMaxMinInstance {
  IntVector a;
  Int a0;
  StandardFormSet set;
  CostModel costs;
  GraverBasis known_graver;  // +-(-a0, 2a, 1)
  Rational threshold;        // -a0 / 2
  std::vector<IntVector> feasible_points;
};

PartitionMaxMinInstance GenPartitionMaxMin(std::span<const Int> a);

// True iff `a` splits into two parts of equal sum, by subset enumeration.
bool HasEqualPartition(std::span<const Int> a);

// Raw integer multicommodity flow data. Commodities are numbered 1..l in the
// model; here index k in [0, l) stands for commodity k + 1.
struct McfData {
  size_t commodities = 0;  // l
  size_t suppliers = 0;    // m
  size_t consumers = 0;    // n
  std::vector<IntVector> supply;    // [k][i]
  std::vector<IntVector> demand;    // [k][j]
  std::vector<IntVector> capacity;  // [i][j]
  // Over the raw flow variables, ordered by RawIndex.
  std::optional<CostModel> costs;

  size_t RawIndex(size_t k, size_t i, size_t j) const {
    return (j * commodities + k) * suppliers + i;
  }
};

// The slack-commodity model. Variables x^k_{i,j} for k = 0..l, where k = 0
// is slack, ordered with j outermost, then k, then i:
//   index(k, i, j) = (j * (l + 1) + k) * m + i.
// Rows: supply (k, i) for k = 0..l, then demand (k, j), then capacity (i, j)
// with sum_k x^k_{i,j} = u_{i,j}.
//
// The equation matrix is the n-fold product (n = consumers) of the bimatrix
//   A1 = I_{(l+1) m}                       (supply rows, one per (k, i))
//   A2 = [ demand rows: row k has ones at columns k*m + i for all i ;
//          capacity rows: row i has ones at columns k*m + i for all k ]
// after reordering rows by `row_permutation`; columns need no reordering.
struct McfInstance {
  McfData data;
  IntVector slack_supply;  // s^0_i
  IntVector slack_demand;  // d^0_j
  StandardFormSet set;
  std::optional<CostModel> costs;  // raw costs with zero slack costs
  std::optional<IntVector> feasible_hint;
  IntMatrix block_top;
  IntMatrix block_bottom;
  std::vector<size_t> row_permutation;
  std::vector<size_t> col_permutation;

  size_t Index(size_t k, size_t i, size_t j) const {
    return (j * (data.commodities + 1) + k) * data.suppliers + i;
  }
  // Drops the slack commodity.
  IntVector ProjectToRaw(std::span<const Int> x) const;
  // Inserts zero slack entries.
  IntVector ExtendCost(std::span<const Int> raw_cost) const;
};

McfInstance BuildMcf(McfData data);

// Three-dimensional transportation over x_{i,j,k}, i < l, j < m, k < n, with
// line sums u_{j,k} = sum_i x, v_{i,k} = sum_j x, w_{i,j} = sum_k x. Variables
// are ordered k outermost, then i, then j: index(i, j, k) = (k l + i) m + j.
// Rows: u rows (j, k), then v rows (i, k), then w rows (i, j).
//
// The equation matrix is the n-fold product of the bimatrix
//   A1 = I_{l m}                            (w rows, one per (i, j))
//   A2 = [ u rows: row j has ones at columns i*m + j for all i ;
//          v rows: row i has ones at columns i*m + j for all j ]
// after reordering rows by `row_permutation`.
struct Transport3Instance {
  size_t l = 0;
  size_t m = 0;
  size_t n = 0;
  std::vector<IntVector> u;  // [j][k]
  std::vector<IntVector> v;  // [i][k]
  std::vector<IntVector> w;  // [i][j]
  StandardFormSet set;
  std::optional<CostModel> costs;
  IntMatrix block_top;
  IntMatrix block_bottom;
  std::vector<size_t> row_permutation;
  std::vector<size_t> col_permutation;

  size_t Index(size_t i, size_t j, size_t k) const {
    return (k * l + i) * m + j;
  }
};

Transport3Instance BuildTransport3(size_t l, size_t m, size_t n,
                                   std::vector<IntVector> u,
                                   std::vector<IntVector> v,
                                   std::vector<IntVector> w,
                                   std::optional<CostModel> costs = {});

// True iff permuting the rows and columns of set.a() gives exactly
// NFoldProduct(a1, a2, n). Result row r is row row_perm[r] of set.a(), and
// likewise for columns.
bool CheckNFoldStructure(const StandardFormSet& set, const IntMatrix& a1,
                         const IntMatrix& a2, size_t n,
                         std::span<const size_t> row_perm,
                         std::span<const size_t> col_perm);

struct RandomParams {
  size_t rows = 1;
  size_t cols = 3;
  Int entry_min = -3;
  Int entry_max = 3;
  Int lower_min = -2;  // lower bounds are drawn from [lower_min, lower_max]
  Int lower_max = 0;
  Int bound_width = 2;  // upper = lower + bound_width
  bool box_costs = true;
  size_t num_costs = 3;  // list size when !box_costs
  Int cost_min = -5;
  Int cost_max = 5;
  Int box_width = 4;  // e = d + [0, box_width]
  uint64_t max_points = 5000;
};

struct RandomInstance {
  StandardFormSet set;
  CostModel costs;
  IntVector reference_point;  // a point of `set` used to build b
};

// Reproducible random instance: identical output for identical seed. The
// bounds alone admit at most (bound_width + 1)^cols points, which must not
// exceed max_points.
RandomInstance GenRandom(const RandomParams& params, uint64_t seed);

IntMatrix GenRandomMatrix(size_t rows, size_t cols, Int entry_min,
                          Int entry_max, uint64_t seed);

// Deterministic generator shared by the random families: mt19937_64 with an
// unbiased bounded draw, so streams do not depend on the standard library's
// distribution implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  Int Uniform(Int lo, Int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace robust_ip

#endif  // ROBUST_IP_INSTANCES_H_
