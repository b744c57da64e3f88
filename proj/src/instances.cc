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

#include "robust_ip/instances.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace robust_ip {

std::string Rational::ToString() const {
  if (den == 1) return num.ToString();
  return num.ToString() + "/" + den.ToString();
}

namespace {

Int SumPositive(std::span<const Int> a) {
  Int total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) {
      throw ValidationError("partition entry a_" + std::to_string(i + 1) +
                            " = " + a[i].ToString() + " is not positive");
    }
    total += a[i];
  }
  if (a.empty()) throw ValidationError("partition vector is empty");
  return total;
}

IntVector Concat(std::initializer_list<std::span<const Int>> parts) {
  IntVector out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

PartitionMinMaxInstance GenPartitionMinMax(std::span<const Int> a) {
  const Int a0 = SumPositive(a);
  const size_t n = a.size();
  IntVector lower(n + 1, 0), upper(n + 1, 1);
  lower[0] = 1;
  StandardFormSet set(IntMatrix(1, n + 1), IntVector{0}, lower, upper);
  const Int zero = 0;
  IntVector c1 = Concat({std::span(&zero, 1), a});
  IntVector c2 = Concat({std::span(&a0, 1), Negate(a)});
  std::vector<IntVector> units;
  for (size_t i = 0; i <= n; ++i) {
    IntVector e(n + 1);
    e[i] = 1;
    units.push_back(std::move(e));
  }
  GraverBasis basis(n + 1, MatrixFingerprint(set.a()), std::move(units));
  return PartitionMinMaxInstance{
      IntVector(a.begin(), a.end()), a0, std::move(set),
      CostModel::List({std::move(c1), std::move(c2)}), std::move(basis),
      Rational{a0, 2}};
}

PartitionMaxMinInstance GenPartitionMaxMin(std::span<const Int> a) {
  const Int a0 = SumPositive(a);
  const size_t n = a.size();
  IntMatrix mat(n + 1, n + 2);
  for (size_t i = 0; i <= n; ++i) mat(i, i) = 1;
  mat(0, n + 1) = a0;
  for (size_t i = 1; i <= n; ++i) mat(i, n + 1) = -2 * a[i - 1];
  IntVector b(n + 1);
  for (size_t i = 1; i <= n; ++i) b[i] = -a[i - 1];
  IntVector lower(n + 2, -Abs(a0)), upper(n + 2, Abs(a0));
  lower[n + 1] = 0;
  upper[n + 1] = 1;
  StandardFormSet set(std::move(mat), std::move(b), lower, upper);

  IntVector d(n + 2, 0), e(n + 2, 1);
  d[0] = 1;
  e[n + 1] = 0;

  const Int zero = 0, one = 1, neg_a0 = -a0;
  IntVector g = Concat({std::span(&neg_a0, 1), IntVector(n), std::span(&one, 1)});
  for (size_t i = 0; i < n; ++i) g[i + 1] = 2 * a[i];
  GraverBasis basis(n + 2, MatrixFingerprint(set.a()), {g});

  IntVector p0 = Concat({std::span(&zero, 1), Negate(a), std::span(&zero, 1)});
  IntVector p1 = Concat({std::span(&neg_a0, 1), a, std::span(&one, 1)});
  return PartitionMaxMinInstance{
      IntVector(a.begin(), a.end()), a0, std::move(set),
      CostModel::Box(std::move(d), std::move(e)), std::move(basis),
      Rational{-a0, 2}, {std::move(p0), std::move(p1)}};
}

bool HasEqualPartition(std::span<const Int> a) {
  if (a.size() >= 63) throw ValidationError("too many entries to enumerate");
  Int total = 0;
  for (Int v : a) total += v;
  for (uint64_t mask = 0; mask < (uint64_t{1} << a.size()); ++mask) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (mask & (uint64_t{1} << i)) s += a[i];
    }
    if (2 * s == total) return true;
  }
  return false;
}

IntVector McfInstance::ProjectToRaw(std::span<const Int> x) const {
  const size_t l = data.commodities, m = data.suppliers, n = data.consumers;
  if (x.size() != (l + 1) * m * n) {
    throw DimensionError("flow vector has wrong length");
  }
  IntVector raw(l * m * n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < l; ++k) {
      for (size_t i = 0; i < m; ++i) {
        raw[data.RawIndex(k, i, j)] = x[Index(k + 1, i, j)];
      }
    }
  }
  return raw;
}

IntVector McfInstance::ExtendCost(std::span<const Int> raw_cost) const {
  const size_t l = data.commodities, m = data.suppliers, n = data.consumers;
  if (raw_cost.size() != l * m * n) {
    throw DimensionError("raw cost vector has length " +
                         std::to_string(raw_cost.size()) + ", expected " +
                         std::to_string(l * m * n));
  }
  IntVector ext((l + 1) * m * n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < l; ++k) {
      for (size_t i = 0; i < m; ++i) {
        ext[Index(k + 1, i, j)] = raw_cost[data.RawIndex(k, i, j)];
      }
    }
  }
  return ext;
}

namespace {

void CheckShape(const std::vector<IntVector>& table, size_t rows, size_t cols,
                const std::string& name) {
  if (table.size() != rows) {
    throw DimensionError(name + " has " + std::to_string(table.size()) +
                         " rows, expected " + std::to_string(rows));
  }
  for (size_t r = 0; r < rows; ++r) {
    if (table[r].size() != cols) {
      throw DimensionError(name + " row " + std::to_string(r) + " has " +
                           std::to_string(table[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    for (size_t c = 0; c < cols; ++c) {
      if (table[r][c] < 0) {
        throw ValidationError(name + "[" + std::to_string(r) + "][" +
                              std::to_string(c) + "] is negative");
      }
    }
  }
}

// North-west corner rule for one commodity.
std::vector<IntVector> NorthWestCorner(IntVector supply, IntVector demand) {
  std::vector<IntVector> flow(supply.size(), IntVector(demand.size()));
  size_t i = 0, j = 0;
  while (i < supply.size() && j < demand.size()) {
    const Int q = std::min(supply[i], demand[j]);
    flow[i][j] = q;
    supply[i] -= q;
    demand[j] -= q;
    if (supply[i] == 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return flow;
}

}  // namespace

McfInstance BuildMcf(McfData data) {
  const size_t l = data.commodities, m = data.suppliers, n = data.consumers;
  if (l == 0 || m == 0 || n == 0) {
    throw ValidationError("flow model needs at least one commodity, supplier "
                          "and consumer");
  }
  CheckShape(data.supply, l, m, "supply");
  CheckShape(data.demand, l, n, "demand");
  CheckShape(data.capacity, m, n, "capacity");
  for (size_t k = 0; k < l; ++k) {
    Int s = 0, d = 0;
    for (Int v : data.supply[k]) s += v;
    for (Int v : data.demand[k]) d += v;
    if (s != d) {
      throw ValidationError("commodity " + std::to_string(k + 1) +
                            " is unbalanced: supply " + s.ToString() +
                            " vs demand " + d.ToString());
    }
  }
  IntVector slack_supply(m), slack_demand(n);
  for (size_t i = 0; i < m; ++i) {
    Int v = 0;
    for (size_t j = 0; j < n; ++j) v += data.capacity[i][j];
    for (size_t k = 0; k < l; ++k) v -= data.supply[k][i];
    if (v < 0) {
      throw ValidationError("supplier " + std::to_string(i) +
                            " has negative slack supply " + v.ToString());
    }
    slack_supply[i] = v;
  }
  for (size_t j = 0; j < n; ++j) {
    Int v = 0;
    for (size_t i = 0; i < m; ++i) v += data.capacity[i][j];
    for (size_t k = 0; k < l; ++k) v -= data.demand[k][j];
    if (v < 0) {
      throw ValidationError("consumer " + std::to_string(j) +
                            " has negative slack demand " + v.ToString());
    }
    slack_demand[j] = v;
  }

  const size_t kk = l + 1;
  const size_t vars = kk * m * n;
  auto index = [&](size_t k, size_t i, size_t j) { return (j * kk + k) * m + i; };
  const size_t supply_rows = kk * m;
  const size_t demand_rows = kk * n;
  const size_t capacity_rows = m * n;
  IntMatrix a(supply_rows + demand_rows + capacity_rows, vars);
  IntVector b(a.rows());
  IntVector lower(vars, 0), upper(vars);
  auto supply_of = [&](size_t k, size_t i) {
    return k == 0 ? slack_supply[i] : data.supply[k - 1][i];
  };
  auto demand_of = [&](size_t k, size_t j) {
    return k == 0 ? slack_demand[j] : data.demand[k - 1][j];
  };
  for (size_t k = 0; k < kk; ++k) {
    for (size_t i = 0; i < m; ++i) {
      const size_t row = k * m + i;
      for (size_t j = 0; j < n; ++j) a(row, index(k, i, j)) = 1;
      b[row] = supply_of(k, i);
    }
    for (size_t j = 0; j < n; ++j) {
      const size_t row = supply_rows + k * n + j;
      for (size_t i = 0; i < m; ++i) a(row, index(k, i, j)) = 1;
      b[row] = demand_of(k, j);
    }
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const size_t row = supply_rows + demand_rows + i * n + j;
      for (size_t k = 0; k < kk; ++k) {
        a(row, index(k, i, j)) = 1;
        upper[index(k, i, j)] = data.capacity[i][j];
      }
      b[row] = data.capacity[i][j];
    }
  }

  IntMatrix top = IntMatrix::Identity(kk * m);
  IntMatrix bottom(kk + m, kk * m);
  for (size_t k = 0; k < kk; ++k) {
    for (size_t i = 0; i < m; ++i) {
      bottom(k, k * m + i) = 1;
      bottom(kk + i, k * m + i) = 1;
    }
  }
  std::vector<size_t> row_perm;
  for (size_t r = 0; r < supply_rows; ++r) row_perm.push_back(r);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < kk; ++k) row_perm.push_back(supply_rows + k * n + j);
    for (size_t i = 0; i < m; ++i) {
      row_perm.push_back(supply_rows + demand_rows + i * n + j);
    }
  }
  std::vector<size_t> col_perm(vars);
  std::iota(col_perm.begin(), col_perm.end(), size_t{0});

  McfInstance inst{std::move(data),
                   std::move(slack_supply),
                   std::move(slack_demand),
                   StandardFormSet(std::move(a), std::move(b), std::move(lower),
                                   std::move(upper)),
                   std::nullopt,
                   std::nullopt,
                   std::move(top),
                   std::move(bottom),
                   std::move(row_perm),
                   std::move(col_perm)};

  if (inst.data.costs.has_value()) {
    const CostModel& raw = *inst.data.costs;
    if (raw.dimension() != l * m * n) {
      throw DimensionError("flow cost model has dimension " +
                           std::to_string(raw.dimension()) + ", expected " +
                           std::to_string(l * m * n));
    }
    if (raw.is_list()) {
      std::vector<IntVector> ext;
      for (const auto& c : raw.list()) ext.push_back(inst.ExtendCost(c));
      inst.costs = CostModel::List(std::move(ext));
    } else {
      inst.costs = CostModel::Box(inst.ExtendCost(raw.lower()),
                                  inst.ExtendCost(raw.upper()));
    }
  }

  // Per-commodity north-west corner flows, kept when they fit the channels.
  IntVector x(vars);
  bool fits = true;
  for (size_t k = 1; k < kk && fits; ++k) {
    auto flow = NorthWestCorner(inst.data.supply[k - 1], inst.data.demand[k - 1]);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) x[index(k, i, j)] = flow[i][j];
    }
  }
  for (size_t i = 0; i < m && fits; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Int used = 0;
      for (size_t k = 1; k < kk; ++k) used += x[index(k, i, j)];
      const Int slack = inst.data.capacity[i][j] - used;
      if (slack < 0) {
        fits = false;
        break;
      }
      x[index(0, i, j)] = slack;
    }
  }
  if (fits && IsMember(inst.set, x)) inst.feasible_hint = std::move(x);
  return inst;
}

Transport3Instance BuildTransport3(size_t l, size_t m, size_t n,
                                   std::vector<IntVector> u,
                                   std::vector<IntVector> v,
                                   std::vector<IntVector> w,
                                   std::optional<CostModel> costs) {
  if (l == 0 || m == 0 || n == 0) {
    throw ValidationError("transportation dimensions must be positive");
  }
  CheckShape(u, m, n, "u");
  CheckShape(v, l, n, "v");
  CheckShape(w, l, m, "w");
  auto total = [](const std::vector<IntVector>& t) {
    Int s = 0;
    for (const auto& row : t) {
      for (Int x : row) s += x;
    }
    return s;
  };
  const Int su = total(u), sv = total(v), sw = total(w);
  if (su != sv) {
    throw InfeasibleError("inconsistent line sums: total of v is " +
                          sv.ToString() + " but total of u is " +
                          su.ToString());
  }
  if (su != sw) {
    throw InfeasibleError("inconsistent line sums: total of w is " +
                          sw.ToString() + " but total of u is " +
                          su.ToString());
  }
  const size_t vars = l * m * n;
  if (costs.has_value() && costs->dimension() != vars) {
    throw DimensionError("transportation cost model has dimension " +
                         std::to_string(costs->dimension()) + ", expected " +
                         std::to_string(vars));
  }
  auto index = [&](size_t i, size_t j, size_t k) { return (k * l + i) * m + j; };
  const size_t u_rows = m * n, v_rows = l * n, w_rows = l * m;
  IntMatrix a(u_rows + v_rows + w_rows, vars);
  IntVector b(a.rows());
  IntVector lower(vars, 0), upper(vars);
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < m; ++j) {
      for (size_t k = 0; k < n; ++k) {
        const size_t x = index(i, j, k);
        a(j * n + k, x) = 1;
        a(u_rows + i * n + k, x) = 1;
        a(u_rows + v_rows + i * m + j, x) = 1;
        upper[x] = std::min({u[j][k], v[i][k], w[i][j]});
      }
    }
  }
  for (size_t j = 0; j < m; ++j) {
    for (size_t k = 0; k < n; ++k) b[j * n + k] = u[j][k];
  }
  for (size_t i = 0; i < l; ++i) {
    for (size_t k = 0; k < n; ++k) b[u_rows + i * n + k] = v[i][k];
    for (size_t j = 0; j < m; ++j) b[u_rows + v_rows + i * m + j] = w[i][j];
  }

  IntMatrix top = IntMatrix::Identity(l * m);
  IntMatrix bottom(m + l, l * m);
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < m; ++j) {
      bottom(j, i * m + j) = 1;
      bottom(m + i, i * m + j) = 1;
    }
  }
  std::vector<size_t> row_perm;
  for (size_t r = 0; r < w_rows; ++r) row_perm.push_back(u_rows + v_rows + r);
  for (size_t k = 0; k < n; ++k) {
    for (size_t j = 0; j < m; ++j) row_perm.push_back(j * n + k);
    for (size_t i = 0; i < l; ++i) row_perm.push_back(u_rows + i * n + k);
  }
  std::vector<size_t> col_perm(vars);
  std::iota(col_perm.begin(), col_perm.end(), size_t{0});

  return Transport3Instance{
      l, m, n, std::move(u), std::move(v), std::move(w),
      StandardFormSet(std::move(a), std::move(b), std::move(lower),
                      std::move(upper)),
      std::move(costs), std::move(top), std::move(bottom),
      std::move(row_perm), std::move(col_perm)};
}

bool CheckNFoldStructure(const StandardFormSet& set, const IntMatrix& a1,
                         const IntMatrix& a2, size_t n,
                         std::span<const size_t> row_perm,
                         std::span<const size_t> col_perm) {
  const IntMatrix expected = NFoldProduct(a1, a2, n);
  const IntMatrix& a = set.a();
  if (expected.rows() != a.rows() || expected.cols() != a.cols()) {
    throw DimensionError(
        "n-fold product is " + std::to_string(expected.rows()) + "x" +
        std::to_string(expected.cols()) + " but the set matrix is " +
        std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return a.PermuteRows(row_perm).PermuteCols(col_perm) == expected;
}

Int Rng::Uniform(Int lo, Int hi) {
  if (lo > hi) throw ValidationError("empty random range");
  const uint64_t span =
      static_cast<uint64_t>(hi.value()) - static_cast<uint64_t>(lo.value());
  if (span == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(engine_());
  }
  const uint64_t range = span + 1;
  // Rejection sampling keeps the draw unbiased.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % range;
  uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<int64_t>(static_cast<uint64_t>(lo.value()) + r % range);
}

IntMatrix GenRandomMatrix(size_t rows, size_t cols, Int entry_min,
                          Int entry_max, uint64_t seed) {
  Rng rng(seed);
  IntMatrix a(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) a(r, c) = rng.Uniform(entry_min, entry_max);
  }
  return a;
}

RandomInstance GenRandom(const RandomParams& p, uint64_t seed) {
  if (p.cols == 0) throw ValidationError("random instance needs columns");
  if (p.bound_width < 0 || p.box_width < 0) {
    throw ValidationError("random widths must be nonnegative");
  }
  if (p.lower_min > p.lower_max || p.entry_min > p.entry_max ||
      p.cost_min > p.cost_max) {
    throw ValidationError("random ranges must satisfy min <= max");
  }
  if (!p.box_costs && p.num_costs == 0) {
    throw ValidationError("random list needs at least one cost");
  }
  uint64_t count = 1;
  for (size_t i = 0; i < p.cols; ++i) {
    const uint64_t w = static_cast<uint64_t>(p.bound_width.value()) + 1;
    if (count > p.max_points / w) {
      throw ValidationError("bounds admit more than " +
                            std::to_string(p.max_points) + " points");
    }
    count *= w;
  }
  Rng rng(seed);
  IntMatrix a(p.rows, p.cols);
  for (size_t r = 0; r < p.rows; ++r) {
    for (size_t c = 0; c < p.cols; ++c) a(r, c) = rng.Uniform(p.entry_min, p.entry_max);
  }
  IntVector lower(p.cols), upper(p.cols), ref(p.cols);
  for (size_t i = 0; i < p.cols; ++i) {
    lower[i] = rng.Uniform(p.lower_min, p.lower_max);
    upper[i] = lower[i] + p.bound_width;
    ref[i] = rng.Uniform(lower[i], upper[i]);
  }
  IntVector b = a.Multiply(ref);
  std::optional<CostModel> costs;
  if (p.box_costs) {
    IntVector d(p.cols), e(p.cols);
    for (size_t i = 0; i < p.cols; ++i) {
      d[i] = rng.Uniform(p.cost_min, p.cost_max);
      e[i] = d[i] + rng.Uniform(0, p.box_width);
    }
    costs = CostModel::Box(std::move(d), std::move(e));
  } else {
    std::vector<IntVector> list(p.num_costs, IntVector(p.cols));
    for (auto& c : list) {
      for (auto& x : c) x = rng.Uniform(p.cost_min, p.cost_max);
    }
    costs = CostModel::List(std::move(list));
  }
  return RandomInstance{
      StandardFormSet(std::move(a), std::move(b), std::move(lower),
                      std::move(upper)),
      *std::move(costs), std::move(ref)};
}

}  // namespace robust_ip
