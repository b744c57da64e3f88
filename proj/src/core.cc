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

#include "robust_ip/core.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace robust_ip {

void CheckSameLength(std::span<const Int> a, std::span<const Int> b,
                     const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": length " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

Int Dot(std::span<const Int> a, std::span<const Int> b) {
  CheckSameLength(a, b, "Dot");
  Int sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

IntVector Add(std::span<const Int> a, std::span<const Int> b) {
  CheckSameLength(a, b, "Add");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector Subtract(std::span<const Int> a, std::span<const Int> b) {
  CheckSameLength(a, b, "Subtract");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector Negate(std::span<const Int> a) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector AddScaled(std::span<const Int> a, Int scale,
                    std::span<const Int> b) {
  CheckSameLength(a, b, "AddScaled");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + scale * b[i];
  return r;
}

bool IsZero(std::span<const Int> a) {
  return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

Int MaxAbs(std::span<const Int> a) {
  Int m = 0;
  for (Int v : a) m = std::max(m, Abs(v));
  return m;
}

std::string ToString(std::span<const Int> a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i > 0) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::FromRows(const std::vector<IntVector>& rows,
                              size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("matrix row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(),
              m.entries_.begin() + static_cast<ptrdiff_t>(r * cols));
  }
  return m;
}

IntMatrix IntMatrix::FromRows(const std::vector<IntVector>& rows) {
  if (rows.empty()) {
    throw DimensionError("cannot infer column count from zero rows");
  }
  return FromRows(rows, rows.front().size());
}

IntMatrix IntMatrix::Identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<IntVector> IntMatrix::ToRows() const {
  std::vector<IntVector> rows;
  rows.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    auto row = Row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

IntVector IntMatrix::Multiply(std::span<const Int> x) const {
  if (x.size() != cols_) {
    throw DimensionError("matrix has " + std::to_string(cols_) +
                         " columns, vector has length " +
                         std::to_string(x.size()));
  }
  IntVector r(rows_);
  for (size_t i = 0; i < rows_; ++i) r[i] = Dot(Row(i), x);
  return r;
}

IntMatrix IntMatrix::Transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

void CheckPermutation(std::span<const size_t> perm, size_t n,
                      const char* what) {
  if (perm.size() != n) {
    throw DimensionError(std::string(what) + " permutation has length " +
                         std::to_string(perm.size()) + ", expected " +
                         std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) {
      throw ValidationError(std::string(what) +
                            " permutation is not a bijection");
    }
    seen[p] = true;
  }
}

}  // namespace

IntMatrix IntMatrix::PermuteRows(std::span<const size_t> perm) const {
  CheckPermutation(perm, rows_, "row");
  IntMatrix m(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(perm[r], c);
  }
  return m;
}

IntMatrix IntMatrix::PermuteCols(std::span<const size_t> perm) const {
  CheckPermutation(perm, cols_, "column");
  IntMatrix m(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, perm[c]);
  }
  return m;
}

size_t IntMatrix::CountNonzeros() const {
  return static_cast<size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [](Int v) { return v != 0; }));
}

bool ConformalLeq(std::span<const Int> x, std::span<const Int> y) {
  CheckSameLength(x, y, "ConformalLeq");
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if ((x[i] > 0) != (y[i] > 0) || y[i] == 0) return false;
    if (Abs(x[i]) > Abs(y[i])) return false;
  }
  return true;
}

StandardFormSet::StandardFormSet(IntMatrix a, IntVector b, IntVector lower,
                                 IntVector upper)
    : a_(std::move(a)),
      b_(std::move(b)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (b_.size() != a_.rows()) {
    throw DimensionError("right-hand side has length " +
                         std::to_string(b_.size()) + ", matrix has " +
                         std::to_string(a_.rows()) + " rows");
  }
  if (lower_.size() != a_.cols() || upper_.size() != a_.cols()) {
    throw DimensionError("bounds must have length " +
                         std::to_string(a_.cols()));
  }
  for (size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] > upper_[i]) {
      throw ValidationError("lower bound exceeds upper bound at index " +
                            std::to_string(i));
    }
  }
}

bool IsMember(const StandardFormSet& set, std::span<const Int> x) {
  if (x.size() != set.num_vars()) {
    throw DimensionError("point has length " + std::to_string(x.size()) +
                         ", set has " + std::to_string(set.num_vars()) +
                         " variables");
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < set.lower()[i] || x[i] > set.upper()[i]) return false;
  }
  return set.a().Multiply(x) == set.b();
}

CostModel CostModel::List(std::vector<IntVector> costs) {
  if (costs.empty()) throw ValidationError("cost list is empty");
  const size_t n = costs.front().size();
  for (size_t k = 0; k < costs.size(); ++k) {
    if (costs[k].size() != n) {
      throw DimensionError("cost vector " + std::to_string(k) +
                           " has length " + std::to_string(costs[k].size()) +
                           ", expected " + std::to_string(n));
    }
  }
  CostModel m;
  m.kind_ = Kind::kList;
  m.dimension_ = n;
  m.list_ = std::move(costs);
  return m;
}

CostModel CostModel::Box(IntVector d, IntVector e) {
  CheckSameLength(d, e, "cost box");
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) {
      throw ValidationError("cost box has d > e at index " +
                            std::to_string(i));
    }
  }
  CostModel m;
  m.kind_ = Kind::kBox;
  m.dimension_ = d.size();
  m.box_lower_ = std::move(d);
  m.box_upper_ = std::move(e);
  return m;
}

const std::vector<IntVector>& CostModel::list() const {
  if (kind_ != Kind::kList) throw ValidationError("cost model is a box");
  return list_;
}

const IntVector& CostModel::lower() const {
  if (kind_ != Kind::kBox) throw ValidationError("cost model is a list");
  return box_lower_;
}

const IntVector& CostModel::upper() const {
  if (kind_ != Kind::kBox) throw ValidationError("cost model is a list");
  return box_upper_;
}

bool CostModel::Contains(std::span<const Int> c) const {
  if (c.size() != dimension_) return false;
  if (is_list()) {
    return std::any_of(list_.begin(), list_.end(), [&](const IntVector& v) {
      return std::equal(v.begin(), v.end(), c.begin());
    });
  }
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < box_lower_[i] || c[i] > box_upper_[i]) return false;
  }
  return true;
}

CostModel CostModel::Negated() const {
  if (is_list()) {
    std::vector<IntVector> neg;
    neg.reserve(list_.size());
    for (const auto& c : list_) neg.push_back(robust_ip::Negate(c));
    return List(std::move(neg));
  }
  return Box(robust_ip::Negate(box_upper_), robust_ip::Negate(box_lower_));
}

Int CostModel::WorstCase(std::span<const Int> x) const {
  if (x.size() != dimension_) {
    throw DimensionError("point length does not match cost dimension");
  }
  if (is_box()) return EvalObjective(BoxObjective(box_lower_, box_upper_), x);
  Int best = Dot(list_.front(), x);
  for (size_t k = 1; k < list_.size(); ++k) {
    best = std::max(best, Dot(list_[k], x));
  }
  return best;
}

namespace {

// Upper envelope of a set of lines, slopes strictly increasing.
std::vector<AffinePiece> Canonicalize(std::vector<AffinePiece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const AffinePiece& p, const AffinePiece& q) {
              if (p.slope != q.slope) return p.slope < q.slope;
              return p.intercept > q.intercept;
            });
  std::vector<AffinePiece> hull;
  for (const AffinePiece& p : pieces) {
    if (!hull.empty() && hull.back().slope == p.slope) continue;
    // The middle line q between o and p never strictly dominates when
    // (q.s - o.s) * (o.b - p.b) <= (o.b - q.b) * (p.s - o.s).
    while (hull.size() >= 2) {
      const AffinePiece& o = hull[hull.size() - 2];
      const AffinePiece& q = hull.back();
      if ((q.slope - o.slope) * (o.intercept - p.intercept) <=
          (o.intercept - q.intercept) * (p.slope - o.slope)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

SeparableConvexObjective::SeparableConvexObjective(
    std::vector<std::vector<AffinePiece>> pieces) {
  pieces_.reserve(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].empty()) {
      throw ValidationError("coordinate " + std::to_string(i) +
                            " has no affine pieces");
    }
    pieces_.push_back(Canonicalize(std::move(pieces[i])));
  }
}

Int SeparableConvexObjective::EvalCoordinate(size_t i, Int t) const {
  const auto& ps = pieces_[i];
  Int best = ps.front()(t);
  for (size_t k = 1; k < ps.size(); ++k) best = std::max(best, ps[k](t));
  return best;
}

Int EvalObjective(const SeparableConvexObjective& f, std::span<const Int> x) {
  if (x.size() != f.num_vars()) {
    throw DimensionError("objective has " + std::to_string(f.num_vars()) +
                         " coordinates, point has " +
                         std::to_string(x.size()));
  }
  Int sum = 0;
  for (size_t i = 0; i < x.size(); ++i) sum += f.EvalCoordinate(i, x[i]);
  return sum;
}

SeparableConvexObjective BoxObjective(std::span<const Int> d,
                                      std::span<const Int> e) {
  CheckSameLength(d, e, "BoxObjective");
  std::vector<std::vector<AffinePiece>> pieces(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) {
      throw ValidationError("box objective has d > e at index " +
                            std::to_string(i));
    }
    pieces[i] = {{d[i], 0}, {e[i], 0}};
  }
  return SeparableConvexObjective(std::move(pieces));
}

SeparableConvexObjective LinearObjective(std::span<const Int> c) {
  std::vector<std::vector<AffinePiece>> pieces(c.size());
  for (size_t i = 0; i < c.size(); ++i) pieces[i] = {{c[i], 0}};
  return SeparableConvexObjective(std::move(pieces));
}

}  // namespace robust_ip
