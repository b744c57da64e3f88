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

#ifndef ROBUST_IP_SOLVER_H_
#define ROBUST_IP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robust_ip/core.h"
#include "robust_ip/graver.h"

namespace robust_ip {

inline constexpr uint64_t kDefaultEnumerationNodes = 200'000'000;

// All points of `set` in lexicographic order. Throws ResourceLimitError when
// more than `max_points` points exist or the search tree exceeds `max_nodes`.
std::vector<IntVector> EnumerateFeasible(
    const StandardFormSet& set, uint64_t max_points,
    uint64_t max_nodes = kDefaultEnumerationNodes);

// Returns `hint` when it lies in `set`, otherwise the lexicographically first
// point, or nullopt when the set is proven empty. Throws ResourceLimitError
// (inconclusive) when the search exceeds `max_nodes` before deciding.
std::optional<IntVector> FindFeasible(
    const StandardFormSet& set, const std::optional<IntVector>& hint,
    uint64_t max_nodes = kDefaultEnumerationNodes);

// Largest lambda >= 0 with x + lambda * g within the bounds of `set`.
Int MaxStride(const StandardFormSet& set, std::span<const Int> x,
              std::span<const Int> g);

struct AugmentationStep {
  IntVector direction;
  Int step;
  Int value;  // objective after the step
};

enum class Termination { kOptimal, kIterationCap };

struct AugmentationTrace {
  IntVector initial_point;
  Int initial_value;
  std::vector<AugmentationStep> steps;
  IntVector final_point;
  Int final_value;
  Termination termination = Termination::kOptimal;
};

struct AugmentationLimits {
  uint64_t max_iterations = 1'000'000;
};

// Graver-best augmentation. Each iteration tries every direction g of the
// full basis, finds the best integer step in [1, MaxStride] by ternary search
// (the objective is convex along g) and applies the pair with the largest
// decrease. Ties go to the lexicographically smallest g, then the smallest
// step. Stops when no direction improves, which certifies optimality for
// separable convex objectives.
AugmentationTrace MinimizeSeparableConvex(const StandardFormSet& set,
                                          const GraverBasis& basis,
                                          const SeparableConvexObjective& f,
                                          std::span<const Int> start,
                                          const AugmentationLimits& limits = {});

AugmentationTrace MinimizeLinear(const StandardFormSet& set,
                                 const GraverBasis& basis,
                                 std::span<const Int> cost,
                                 std::span<const Int> start,
                                 const AugmentationLimits& limits = {});

// Independent optimality check: returns a direction g of the full basis with
// x + g feasible and f(x + g) < f(x), or nullopt. By convexity along g, no
// such unit step means no improving step of any length.
std::optional<IntVector> FindImprovingDirection(
    const StandardFormSet& set, const GraverBasis& basis,
    const SeparableConvexObjective& f, std::span<const Int> x);

}  // namespace robust_ip

#endif  // ROBUST_IP_SOLVER_H_
