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

#ifndef ROBUST_IP_CORE_H_
#define ROBUST_IP_CORE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "robust_ip/errors.h"
#include "robust_ip/integer.h"

namespace robust_ip {

using IntVector = std::vector<Int>;

Int Dot(std::span<const Int> a, std::span<const Int> b);
IntVector Add(std::span<const Int> a, std::span<const Int> b);
IntVector Subtract(std::span<const Int> a, std::span<const Int> b);
IntVector Negate(std::span<const Int> a);
// Returns a + scale * b.
IntVector AddScaled(std::span<const Int> a, Int scale, std::span<const Int> b);
bool IsZero(std::span<const Int> a);
// Largest absolute entry, 0 for the empty vector.
Int MaxAbs(std::span<const Int> a);
std::string ToString(std::span<const Int> a);

void CheckSameLength(std::span<const Int> a, std::span<const Int> b,
                     const char* what);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // All rows must have length `cols`.
  static IntMatrix FromRows(const std::vector<IntVector>& rows, size_t cols);
  static IntMatrix FromRows(const std::vector<IntVector>& rows);
  static IntMatrix Identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  Int operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Int> Row(size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<IntVector> ToRows() const;

  IntVector Multiply(std::span<const Int> x) const;
  IntMatrix Transposed() const;
  // Rows permuted so that result row r is this->Row(perm[r]).
  IntMatrix PermuteRows(std::span<const size_t> perm) const;
  // Columns permuted so that result column c is column perm[c].
  IntMatrix PermuteCols(std::span<const size_t> perm) const;
  size_t CountNonzeros() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  IntVector entries_;
};

// x <= y in the conformal order: x_i * y_i >= 0 and |x_i| <= |y_i| for all i.
bool ConformalLeq(std::span<const Int> x, std::span<const Int> y);

// X = { x in Z^n : A x = b, lower <= x <= upper } with finite bounds.
class StandardFormSet {
 public:
  StandardFormSet(IntMatrix a, IntVector b, IntVector lower, IntVector upper);

  const IntMatrix& a() const { return a_; }
  const IntVector& b() const { return b_; }
  const IntVector& lower() const { return lower_; }
  const IntVector& upper() const { return upper_; }
  size_t num_vars() const { return a_.cols(); }
  size_t num_rows() const { return a_.rows(); }

  friend bool operator==(const StandardFormSet&,
                         const StandardFormSet&) = default;

 private:
  IntMatrix a_;
  IntVector b_;
  IntVector lower_;
  IntVector upper_;
};

bool IsMember(const StandardFormSet& set, std::span<const Int> x);

// Uncertainty set of cost vectors: an explicit nonempty list or an integer
// box { c : d <= c <= e }.
class CostModel {
 public:
  enum class Kind { kList, kBox };

  static CostModel List(std::vector<IntVector> costs);
  static CostModel Box(IntVector d, IntVector e);

  Kind kind() const { return kind_; }
  bool is_list() const { return kind_ == Kind::kList; }
  bool is_box() const { return kind_ == Kind::kBox; }
  size_t dimension() const { return dimension_; }

  // Valid only for kList.
  const std::vector<IntVector>& list() const;
  // Valid only for kBox.
  const IntVector& lower() const;
  const IntVector& upper() const;

  bool Contains(std::span<const Int> c) const;
  // Negated model -C: list entries negated, box [d, e] -> [-e, -d].
  CostModel Negated() const;
  // max_{c in C} c.x, exact.
  Int WorstCase(std::span<const Int> x) const;

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  CostModel() = default;

  Kind kind_ = Kind::kList;
  size_t dimension_ = 0;
  std::vector<IntVector> list_;
  IntVector box_lower_;
  IntVector box_upper_;
};

// t -> slope * t + intercept.
struct AffinePiece {
  Int slope;
  Int intercept;

  Int operator()(Int t) const { return slope * t + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// f(x) = sum_i f_i(x_i) where each f_i is the pointwise maximum of affine
// pieces. Pieces are stored as the upper envelope: slopes strictly increasing,
// every piece attains the maximum somewhere on the real line.
class SeparableConvexObjective {
 public:
  explicit SeparableConvexObjective(
      std::vector<std::vector<AffinePiece>> pieces);

  size_t num_vars() const { return pieces_.size(); }
  const std::vector<AffinePiece>& pieces(size_t i) const {
    return pieces_[i];
  }
  Int EvalCoordinate(size_t i, Int t) const;

 private:
  std::vector<std::vector<AffinePiece>> pieces_;
};

Int EvalObjective(const SeparableConvexObjective& f, std::span<const Int> x);

// f_i(t) = max(d_i t, e_i t); f(x) equals max over the box [d, e] of c.x.
SeparableConvexObjective BoxObjective(std::span<const Int> d,
                                      std::span<const Int> e);
SeparableConvexObjective LinearObjective(std::span<const Int> c);

}  // namespace robust_ip

#endif  // ROBUST_IP_CORE_H_
