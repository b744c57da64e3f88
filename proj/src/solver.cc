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
#include <string>

#include "robust_ip/enumerate.h"

namespace robust_ip {

std::vector<IntVector> EnumerateFeasible(const StandardFormSet& set,
                                         uint64_t max_points,
                                         uint64_t max_nodes) {
  if (max_points == 0) throw ValidationError("point cap must be positive");
  std::vector<IntVector> points;
  ForEachFeasiblePoint(
      set,
      [&](std::span<const Int> x) {
        if (points.size() >= max_points) {
          throw ResourceLimitError("feasible set has more than " +
                                   std::to_string(max_points) + " points");
        }
        points.emplace_back(x.begin(), x.end());
        return true;
      },
      max_nodes);
  return points;
}

std::optional<IntVector> FindFeasible(const StandardFormSet& set,
                                      const std::optional<IntVector>& hint,
                                      uint64_t max_nodes) {
  if (hint.has_value() && hint->size() == set.num_vars() &&
      IsMember(set, *hint)) {
    return hint;
  }
  std::optional<IntVector> found;
  ForEachFeasiblePoint(
      set,
      [&](std::span<const Int> x) {
        found.emplace(x.begin(), x.end());
        return false;
      },
      max_nodes);
  return found;
}

Int MaxStride(const StandardFormSet& set, std::span<const Int> x,
              std::span<const Int> g) {
  CheckSameLength(x, g, "MaxStride");
  std::optional<Int> stride;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    const Int room = g[i] > 0 ? FloorDiv(set.upper()[i] - x[i], g[i])
                              : FloorDiv(x[i] - set.lower()[i], -g[i]);
    stride = stride.has_value() ? std::min(*stride, room) : room;
  }
  if (!stride.has_value()) throw ValidationError("direction is zero");
  return std::max(*stride, Int(0));
}

namespace {

void CheckBasisMatches(const StandardFormSet& set, const GraverBasis& basis) {
  if (basis.num_vars() != set.num_vars()) {
    throw DimensionError("Graver basis has " +
                         std::to_string(basis.num_vars()) +
                         " coordinates, set has " +
                         std::to_string(set.num_vars()));
  }
  if (basis.matrix_sha() != MatrixFingerprint(set.a())) {
    throw ValidationError("Graver basis fingerprint does not match the matrix");
  }
}

// f(x + lambda g) - f(x), touching only the support of g.
class LineObjective {
 public:
  LineObjective(const SeparableConvexObjective& f, std::span<const Int> x,
                std::span<const Int> g)
      : f_(f), x_(x), g_(g) {
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) {
        support_.push_back(i);
        base_ += f.EvalCoordinate(i, x[i]);
      }
    }
  }

  Int Delta(Int lambda) const {
    Int v = 0;
    for (size_t i : support_) v += f_.EvalCoordinate(i, x_[i] + lambda * g_[i]);
    return v - base_;
  }

 private:
  const SeparableConvexObjective& f_;
  std::span<const Int> x_;
  std::span<const Int> g_;
  std::vector<size_t> support_;
  Int base_ = 0;
};

struct StepChoice {
  Int step;
  Int delta;
};

// Smallest minimizer of the convex function `line` over [1, max_step].
StepChoice TernarySearch(const LineObjective& line, Int max_step) {
  Int lo = 1;
  Int hi = max_step;
  while (hi - lo > 2) {
    const Int third = FloorDiv(hi - lo, 3);
    const Int m1 = lo + third;
    const Int m2 = hi - third;
    // On a tie the smallest minimizer still lies below m2.
    if (line.Delta(m1) <= line.Delta(m2)) {
      hi = m2 - 1;
    } else {
      lo = m1 + 1;
    }
  }
  StepChoice best{lo, line.Delta(lo)};
  for (Int s = lo + 1; s <= hi; s += 1) {
    const Int d = line.Delta(s);
    if (d < best.delta) best = {s, d};
  }
  return best;
}

}  // namespace

AugmentationTrace MinimizeSeparableConvex(const StandardFormSet& set,
                                          const GraverBasis& basis,
                                          const SeparableConvexObjective& f,
                                          std::span<const Int> start,
                                          const AugmentationLimits& limits) {
  CheckBasisMatches(set, basis);
  if (f.num_vars() != set.num_vars()) {
    throw DimensionError("objective and set dimensions differ");
  }
  if (start.size() != set.num_vars() || !IsMember(set, start)) {
    throw ValidationError("starting point " + ToString(start) +
                          " is not feasible");
  }
  const std::vector<IntVector> directions = basis.FullSet();
  AugmentationTrace trace;
  trace.initial_point.assign(start.begin(), start.end());
  trace.initial_value = EvalObjective(f, start);
  IntVector x = trace.initial_point;
  Int value = trace.initial_value;

  while (true) {
    const IntVector* best_dir = nullptr;
    StepChoice best{0, 0};
    for (const auto& g : directions) {
      const Int max_step = MaxStride(set, x, g);
      if (max_step < 1) continue;
      const StepChoice c = TernarySearch(LineObjective(f, x, g), max_step);
      if (c.delta < best.delta) {
        best = c;
        best_dir = &g;
      }
    }
    if (best_dir == nullptr) {
      trace.termination = Termination::kOptimal;
      break;
    }
    if (trace.steps.size() >= limits.max_iterations) {
      trace.termination = Termination::kIterationCap;
      break;
    }
    x = AddScaled(x, best.step, *best_dir);
    value += best.delta;
    trace.steps.push_back({*best_dir, best.step, value});
  }
  trace.final_point = std::move(x);
  trace.final_value = value;
  return trace;
}

AugmentationTrace MinimizeLinear(const StandardFormSet& set,
                                 const GraverBasis& basis,
                                 std::span<const Int> cost,
                                 std::span<const Int> start,
                                 const AugmentationLimits& limits) {
  return MinimizeSeparableConvex(set, basis, LinearObjective(cost), start,
                                 limits);
}

std::optional<IntVector> FindImprovingDirection(
    const StandardFormSet& set, const GraverBasis& basis,
    const SeparableConvexObjective& f, std::span<const Int> x) {
  const Int current = EvalObjective(f, x);
  for (const auto& g : basis.FullSet()) {
    IntVector y = Add(x, g);
    if (!IsMember(set, y)) continue;
    if (EvalObjective(f, y) < current) return g;
  }
  return std::nullopt;
}

}  // namespace robust_ip
