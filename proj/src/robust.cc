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

#include <utility>

#include "robust_ip/enumerate.h"

namespace robust_ip {

std::string VariantName(RobustVariant v) {
  switch (v) {
    case RobustVariant::kMinMaxList:
      return "minmax-list-exact";
    case RobustVariant::kMinMaxBox:
      return "minmax-box";
    case RobustVariant::kMaxMinList:
      return "maxmin-list";
    case RobustVariant::kMaxMinBox:
      return "maxmin-box-exact";
  }
  return "unknown";
}

RobustVariant ParseVariant(const std::string& name) {
  for (RobustVariant v :
       {RobustVariant::kMinMaxList, RobustVariant::kMinMaxBox,
        RobustVariant::kMaxMinList, RobustVariant::kMaxMinBox}) {
    if (VariantName(v) == name) return v;
  }
  throw ValidationError("unknown variant '" + name + "'");
}

std::string MethodName(SolveMethod m) {
  return m == SolveMethod::kGraver ? "graver" : "exact-enumeration";
}

SolveMethod ParseMethod(const std::string& name) {
  if (name == "graver") return SolveMethod::kGraver;
  if (name == "exact-enumeration") return SolveMethod::kExactEnumeration;
  throw ValidationError("unknown method '" + name + "'");
}

namespace {

IntVector StartingPoint(const StandardFormSet& set,
                        const RobustOptions& options) {
  std::optional<IntVector> x0 =
      FindFeasible(set, options.hint, options.max_nodes);
  if (!x0.has_value()) throw InfeasibleError("feasible set is empty");
  return *std::move(x0);
}

void RequireOptimal(const AugmentationTrace& trace) {
  if (trace.termination != Termination::kOptimal) {
    throw ResourceLimitError("augmentation hit the iteration cap after " +
                             std::to_string(trace.steps.size()) + " steps");
  }
}

void CheckCostDimension(const StandardFormSet& set, std::span<const Int> c) {
  if (c.size() != set.num_vars()) {
    throw DimensionError("cost vector has length " + std::to_string(c.size()) +
                         ", set has " + std::to_string(set.num_vars()) +
                         " variables");
  }
}

void SelfCheck(const RobustReport& report, const StandardFormSet& set,
               const CostModel& costs) {
  const CheckResult check = CheckWitnessConsistency(report, set, costs);
  if (!check.passed) {
    throw Error("internal witness inconsistency: " + check.detail);
  }
}

}  // namespace

RobustReport MinMaxBox(const StandardFormSet& set, const GraverBasis& basis,
                       std::span<const Int> d, std::span<const Int> e,
                       const RobustOptions& options) {
  CheckCostDimension(set, d);
  const CostModel box = CostModel::Box(IntVector(d.begin(), d.end()),
                                       IntVector(e.begin(), e.end()));
  const SeparableConvexObjective f = BoxObjective(d, e);
  const IntVector x0 = StartingPoint(set, options);
  AugmentationTrace trace =
      MinimizeSeparableConvex(set, basis, f, x0, options.augmentation);
  RequireOptimal(trace);

  RobustReport report;
  report.variant = RobustVariant::kMinMaxBox;
  report.method = SolveMethod::kGraver;
  report.value = trace.final_value;
  report.optimizer = trace.final_point;
  report.witness.resize(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    report.witness[i] = report.optimizer[i] < 0 ? d[i] : e[i];
  }
  report.augmentation_steps = trace.steps.size();
  report.inner_solves = 1;
  report.traces.push_back(std::move(trace));
  SelfCheck(report, set, box);
  return report;
}

RobustReport MaxMinList(const StandardFormSet& set, const GraverBasis& basis,
                        const std::vector<IntVector>& costs,
                        const RobustOptions& options) {
  const CostModel list = CostModel::List(costs);
  CheckCostDimension(set, costs.front());
  const IntVector x0 = StartingPoint(set, options);

  RobustReport report;
  report.variant = RobustVariant::kMaxMinList;
  report.method = SolveMethod::kGraver;
  bool have_best = false;
  for (const auto& c : costs) {
    AugmentationTrace trace =
        MinimizeLinear(set, basis, c, x0, options.augmentation);
    RequireOptimal(trace);
    ++report.inner_solves;
    report.augmentation_steps += trace.steps.size();
    if (!have_best || trace.final_value > report.value) {
      have_best = true;
      report.value = trace.final_value;
      report.optimizer = c;
      report.witness = trace.final_point;
    }
    report.traces.push_back(std::move(trace));
  }
  SelfCheck(report, set, list);
  return report;
}

RobustReport MinMaxListExact(const StandardFormSet& set,
                             const std::vector<IntVector>& costs,
                             const RobustOptions& options) {
  const CostModel list = CostModel::List(costs);
  CheckCostDimension(set, costs.front());

  RobustReport report;
  report.variant = RobustVariant::kMinMaxList;
  report.method = SolveMethod::kExactEnumeration;
  bool have_best = false;
  ForEachFeasiblePoint(
      set,
      [&](std::span<const Int> x) {
        if (++report.enumerated_points > options.max_points) {
          throw ResourceLimitError("inconclusive: feasible set has more than " +
                                   std::to_string(options.max_points) +
                                   " points");
        }
        size_t arg = 0;
        Int worst = Dot(costs[0], x);
        for (size_t k = 1; k < costs.size(); ++k) {
          const Int v = Dot(costs[k], x);
          if (v > worst) {
            worst = v;
            arg = k;
          }
        }
        if (!have_best || worst < report.value) {
          have_best = true;
          report.value = worst;
          report.optimizer.assign(x.begin(), x.end());
          report.witness = costs[arg];
        }
        return true;
      },
      options.max_nodes);
  if (!have_best) throw InfeasibleError("feasible set is empty");
  SelfCheck(report, set, list);
  return report;
}

RobustReport MaxMinBoxExact(const StandardFormSet& set,
                            const GraverBasis& basis, std::span<const Int> d,
                            std::span<const Int> e,
                            const RobustOptions& options) {
  CheckCostDimension(set, d);
  const CostModel box = CostModel::Box(IntVector(d.begin(), d.end()),
                                       IntVector(e.begin(), e.end()));
  uint64_t volume = 1;
  for (size_t i = 0; i < d.size(); ++i) {
    const Int width = e[i] - d[i] + 1;
    if (width.value() > static_cast<int64_t>(options.max_box_volume) ||
        volume * static_cast<uint64_t>(width.value()) >
            options.max_box_volume) {
      throw ResourceLimitError("inconclusive: cost box has more than " +
                               std::to_string(options.max_box_volume) +
                               " integer points");
    }
    volume *= static_cast<uint64_t>(width.value());
  }
  const IntVector x0 = StartingPoint(set, options);

  RobustReport report;
  report.variant = RobustVariant::kMaxMinBox;
  report.method = SolveMethod::kExactEnumeration;
  bool have_best = false;
  // Odometer over the box in lexicographic order.
  IntVector c(d.begin(), d.end());
  while (true) {
    const AugmentationTrace trace =
        MinimizeLinear(set, basis, c, x0, options.augmentation);
    RequireOptimal(trace);
    ++report.inner_solves;
    report.augmentation_steps += trace.steps.size();
    if (!have_best || trace.final_value > report.value) {
      have_best = true;
      report.value = trace.final_value;
      report.optimizer = c;
      report.witness = trace.final_point;
    }
    size_t i = c.size();
    while (i > 0 && c[i - 1] == e[i - 1]) {
      c[i - 1] = d[i - 1];
      --i;
    }
    if (i == 0) break;
    c[i - 1] += 1;
  }
  SelfCheck(report, set, box);
  return report;
}

RobustReport SolveRobust(RobustVariant variant, const StandardFormSet& set,
                         const CostModel& costs, const GraverBasis* basis,
                         const RobustOptions& options) {
  const bool needs_list = variant == RobustVariant::kMinMaxList ||
                          variant == RobustVariant::kMaxMinList;
  if (needs_list != costs.is_list()) {
    throw ValidationError("variant " + VariantName(variant) +
                          " does not match a " +
                          (costs.is_list() ? "list" : "box") + " cost model");
  }
  if (variant != RobustVariant::kMinMaxList && basis == nullptr) {
    throw ValidationError("variant " + VariantName(variant) +
                          " requires a Graver basis");
  }
  switch (variant) {
    case RobustVariant::kMinMaxList:
      return MinMaxListExact(set, costs.list(), options);
    case RobustVariant::kMinMaxBox:
      return MinMaxBox(set, *basis, costs.lower(), costs.upper(), options);
    case RobustVariant::kMaxMinList:
      return MaxMinList(set, *basis, costs.list(), options);
    case RobustVariant::kMaxMinBox:
      return MaxMinBoxExact(set, *basis, costs.lower(), costs.upper(),
                            options);
  }
  throw Error("unreachable variant");
}

ProfitReport DualProfitVariant(ProfitVariant variant,
                               const StandardFormSet& set,
                               const CostModel& costs,
                               const GraverBasis* basis,
                               const RobustOptions& options) {
  const CostModel negated = costs.Negated();
  RobustVariant underlying;
  if (variant == ProfitVariant::kMaxMin) {
    underlying = costs.is_list() ? RobustVariant::kMinMaxList
                                 : RobustVariant::kMinMaxBox;
  } else {
    underlying = costs.is_list() ? RobustVariant::kMaxMinList
                                 : RobustVariant::kMaxMinBox;
  }
  ProfitReport report;
  report.variant = variant;
  report.negated = SolveRobust(underlying, set, negated, basis, options);
  report.value = -report.negated.value;
  if (variant == ProfitVariant::kMaxMin) {
    report.optimizer = report.negated.optimizer;
    report.witness = Negate(report.negated.witness);
  } else {
    report.optimizer = Negate(report.negated.optimizer);
    report.witness = report.negated.witness;
  }
  return report;
}

CheckResult CheckWitnessConsistency(const RobustReport& report,
                                    const StandardFormSet& set,
                                    const CostModel& costs) {
  CheckResult check("witness_consistency");
  auto fail = [&](std::string why) {
    check.passed = false;
    check.detail = std::move(why);
    return check;
  };
  const IntVector& x = report.decision();
  const IntVector& c = report.cost();
  if (x.size() != set.num_vars() || !IsMember(set, x)) {
    return fail("decision " + ToString(x) + " is not feasible");
  }
  if (!costs.Contains(c)) {
    return fail("cost " + ToString(c) + " is not in the cost model");
  }
  const Int cx = Dot(c, x);
  if (cx != report.value) {
    return fail("reported value " + report.value.ToString() +
                " differs from c.x = " + cx.ToString());
  }
  if (IsMinMax(report.variant)) {
    const Int worst = costs.WorstCase(x);
    if (worst != report.value) {
      return fail("reported value " + report.value.ToString() +
                  " differs from the worst case " + worst.ToString());
    }
  }
  return check;
}

CheckResult CheckGraverCertificate(const RobustReport& report,
                                   const StandardFormSet& set,
                                   const CostModel& costs,
                                   const GraverBasis& basis) {
  CheckResult check("graver_certificate");
  std::optional<IntVector> better;
  switch (report.variant) {
    case RobustVariant::kMinMaxList:
      check.detail = "not applicable to list min-max";
      return check;
    case RobustVariant::kMinMaxBox:
      better = FindImprovingDirection(
          set, basis, BoxObjective(costs.lower(), costs.upper()),
          report.optimizer);
      break;
    case RobustVariant::kMaxMinList:
    case RobustVariant::kMaxMinBox:
      better = FindImprovingDirection(set, basis,
                                      LinearObjective(report.optimizer),
                                      report.witness);
      break;
  }
  if (better.has_value()) {
    check.passed = false;
    check.detail = "direction " + ToString(*better) + " improves the solution";
    check.counterexample = {*better};
  }
  return check;
}

}  // namespace robust_ip
