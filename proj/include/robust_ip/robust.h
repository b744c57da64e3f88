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

#ifndef ROBUST_IP_ROBUST_H_
#define ROBUST_IP_ROBUST_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robust_ip/core.h"
#include "robust_ip/graver.h"
#include "robust_ip/solver.h"

namespace robust_ip {

enum class RobustVariant {
  kMinMaxList,  // min_x max_{c in list} c.x, exact enumeration
  kMinMaxBox,   // min_x max_{c in box} c.x, Graver augmentation
  kMaxMinList,  // max_{c in list} min_x c.x, Graver augmentation per cost
  kMaxMinBox,   // max_{c in box} min_x c.x, enumeration over the box
};

enum class SolveMethod { kGraver, kExactEnumeration };

std::string VariantName(RobustVariant v);
RobustVariant ParseVariant(const std::string& name);
std::string MethodName(SolveMethod m);
SolveMethod ParseMethod(const std::string& name);
inline bool IsMinMax(RobustVariant v) {
  return v == RobustVariant::kMinMaxList || v == RobustVariant::kMinMaxBox;
}

// For min-max variants `optimizer` is the decision x and `witness` the
// adversarial cost attaining max_c c.x. For max-min variants `optimizer` is
// the cost c and `witness` the inner minimizer x. In both cases
// value == optimizer . witness.
struct RobustReport {
  RobustVariant variant = RobustVariant::kMinMaxBox;
  Int value;
  IntVector optimizer;
  IntVector witness;
  SolveMethod method = SolveMethod::kGraver;
  uint64_t augmentation_steps = 0;
  uint64_t inner_solves = 0;
  uint64_t enumerated_points = 0;
  // Augmentation traces behind the reported optimum: one for min-max box,
  // one per cost for max-min list. Left empty for the exact variants.
  std::vector<AugmentationTrace> traces;

  const IntVector& decision() const { return IsMinMax(variant) ? optimizer : witness; }
  const IntVector& cost() const { return IsMinMax(variant) ? witness : optimizer; }
};

struct RobustOptions {
  AugmentationLimits augmentation;
  // Starting point for augmentation; the lexicographically first feasible
  // point is used when absent or infeasible.
  std::optional<IntVector> hint;
  uint64_t max_points = 1'000'000;
  uint64_t max_nodes = kDefaultEnumerationNodes;
  uint64_t max_box_volume = 1'000'000;
};

RobustReport MinMaxBox(const StandardFormSet& set, const GraverBasis& basis,
                       std::span<const Int> d, std::span<const Int> e,
                       const RobustOptions& options = {});

RobustReport MaxMinList(const StandardFormSet& set, const GraverBasis& basis,
                        const std::vector<IntVector>& costs,
                        const RobustOptions& options = {});

RobustReport MinMaxListExact(const StandardFormSet& set,
                             const std::vector<IntVector>& costs,
                             const RobustOptions& options = {});

RobustReport MaxMinBoxExact(const StandardFormSet& set,
                            const GraverBasis& basis, std::span<const Int> d,
                            std::span<const Int> e,
                            const RobustOptions& options = {});

// Dispatches on `variant`; `basis` may be null only for kMinMaxList.
RobustReport SolveRobust(RobustVariant variant, const StandardFormSet& set,
                         const CostModel& costs, const GraverBasis* basis,
                         const RobustOptions& options = {});

enum class ProfitVariant {
  kMaxMin,  // max_{x in X} min_{c in C} c.x = -min_x max_{c in -C} c.x
  kMinMax,  // min_{c in C} max_{x in X} c.x = -max_{c in -C} min_x c.x
};

struct ProfitReport {
  ProfitVariant variant = ProfitVariant::kMaxMin;
  Int value;
  // x for kMaxMin, c for kMinMax; `witness` is the other player's reply.
  IntVector optimizer;
  IntVector witness;
  RobustReport negated;  // the cost-side solve over -C
};

// Solves the profit form through the negated cost model. List models route
// to the exact (kMaxMin) or Graver (kMinMax) list solvers, box models to the
// Graver (kMaxMin) or exact (kMinMax) box solvers.
ProfitReport DualProfitVariant(ProfitVariant variant,
                               const StandardFormSet& set,
                               const CostModel& costs,
                               const GraverBasis* basis,
                               const RobustOptions& options = {});

// Re-evaluates the report against the instance: the decision is feasible,
// the cost lies in C, value == c.x, and for min-max variants the value is
// the worst case of the decision.
CheckResult CheckWitnessConsistency(const RobustReport& report,
                                    const StandardFormSet& set,
                                    const CostModel& costs);

// Graver optimality certificate of the reported solution: for min-max box,
// no direction improves the worst-case objective at the decision; for
// max-min variants, no direction improves c.x at the inner minimizer. Not
// applicable (passes) for min-max list.
CheckResult CheckGraverCertificate(const RobustReport& report,
                                   const StandardFormSet& set,
                                   const CostModel& costs,
                                   const GraverBasis& basis);

}  // namespace robust_ip

#endif  // ROBUST_IP_ROBUST_H_
