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

#include "robust_ip/cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "robust_ip/core.h"
#include "robust_ip/graver.h"
#include "robust_ip/instances.h"
#include "robust_ip/io.h"
#include "robust_ip/robust.h"

namespace robust_ip {
namespace {

namespace fs = std::filesystem;

IntVector ParseVectorArg(const std::string& text, const std::string& flag) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(static_cast<int64_t>(x));
    } catch (const std::exception&) {
      throw ValidationError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (v.empty()) throw ValidationError(flag + ": empty list");
  return v;
}

// Rows separated by ';', entries by ','.
std::vector<IntVector> ParseMatrixArg(const std::string& text,
                                      const std::string& flag) {
  std::vector<IntVector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(ParseVectorArg(row, flag));
  if (rows.empty()) throw ValidationError(flag + ": empty matrix");
  return rows;
}

Json VectorsJson(const std::vector<IntVector>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(VectorToJson(r));
  return j;
}

struct CostArgs {
  std::string lower;
  std::string upper;
  std::string list;
};

bool HasExplicitCosts(const CostArgs& args) {
  return !args.list.empty() || !args.lower.empty() || !args.upper.empty();
}

// Explicit box or list costs when given, otherwise a seeded random box with
// d in [0, 4] and e - d in [0, 3].
CostModel CostsFromArgs(const CostArgs& args, size_t dim, uint64_t seed,
                        Json& params) {
  if (!args.list.empty()) {
    auto vectors = ParseMatrixArg(args.list, "--cost-list");
    for (const auto& c : vectors) {
      if (c.size() != dim) {
        throw ValidationError("--cost-list: vectors must have length " +
                              std::to_string(dim));
      }
    }
    params["cost_list"] = VectorsJson(vectors);
    return CostModel::List(std::move(vectors));
  }
  if (!args.lower.empty() || !args.upper.empty()) {
    IntVector d = ParseVectorArg(args.lower, "--cost-lower");
    IntVector e = ParseVectorArg(args.upper, "--cost-upper");
    if (d.size() != dim || e.size() != dim) {
      throw ValidationError("--cost-lower/--cost-upper must have length " +
                            std::to_string(dim));
    }
    params["cost_lower"] = VectorToJson(d);
    params["cost_upper"] = VectorToJson(e);
    return CostModel::Box(std::move(d), std::move(e));
  }
  Rng rng(seed);
  IntVector d(dim), e(dim);
  for (size_t i = 0; i < dim; ++i) {
    d[i] = rng.Uniform(0, 4);
    e[i] = d[i] + rng.Uniform(0, 3);
  }
  params["cost_random_box"] = true;
  return CostModel::Box(std::move(d), std::move(e));
}

struct GenArgs {
  std::string family;
  std::string out;
  uint64_t seed = 0;
  std::string a;
  std::string supply, demand, capacity;
  std::string u, v, w;
  CostArgs costs;
  RandomParams random;
  std::string cost_kind = "box";
  int64_t entry_min = -3, entry_max = 3;
  int64_t lower_min = -2, lower_max = 0;
  int64_t bound_width = 2;
  int64_t cost_min = -5, cost_max = 5;
  int64_t box_width = 4;
};

InstanceFile GenerateInstance(const GenArgs& g) {
  Json params = Json::object();
  if (g.family == "partition-minmax" || g.family == "partition-maxmin") {
    if (g.a.empty()) throw ValidationError("--a is required for " + g.family);
    const IntVector a = ParseVectorArg(g.a, "--a");
    params["a"] = VectorToJson(a);
    // The family's own costs unless overridden on the command line.
    auto costs = [&](const CostModel& own) {
      return HasExplicitCosts(g.costs)
                 ? CostsFromArgs(g.costs, own.dimension(), g.seed, params)
                 : own;
    };
    if (g.family == "partition-minmax") {
      auto inst = GenPartitionMinMax(a);
      IntVector hint(a.size() + 1);
      hint[0] = 1;
      return InstanceFile{inst.set, costs(inst.costs),
                          inst.known_graver.elements(), std::move(hint),
                          Provenance{g.family, params, std::nullopt}};
    }
    auto inst = GenPartitionMaxMin(a);
    return InstanceFile{inst.set, costs(inst.costs),
                        inst.known_graver.elements(),
                        inst.feasible_points.front(),
                        Provenance{g.family, params, std::nullopt}};
  }
  if (g.family == "mcf") {
    McfData data;
    data.supply = ParseMatrixArg(g.supply, "--supply");
    data.demand = ParseMatrixArg(g.demand, "--demand");
    data.capacity = ParseMatrixArg(g.capacity, "--capacity");
    data.commodities = data.supply.size();
    data.suppliers = data.supply.front().size();
    data.consumers = data.demand.front().size();
    params["supply"] = VectorsJson(data.supply);
    params["demand"] = VectorsJson(data.demand);
    params["capacity"] = VectorsJson(data.capacity);
    data.costs = CostsFromArgs(
        g.costs, data.commodities * data.suppliers * data.consumers, g.seed,
        params);
    McfInstance inst = BuildMcf(std::move(data));
    return InstanceFile{inst.set, *inst.costs, std::nullopt,
                        inst.feasible_hint,
                        Provenance{g.family, params, g.seed}};
  }
  if (g.family == "transport3") {
    auto u = ParseMatrixArg(g.u, "--u");
    auto v = ParseMatrixArg(g.v, "--v");
    auto w = ParseMatrixArg(g.w, "--w");
    const size_t l = v.size(), m = u.size(), n = u.front().size();
    params["u"] = VectorsJson(u);
    params["v"] = VectorsJson(v);
    params["w"] = VectorsJson(w);
    auto inst = BuildTransport3(l, m, n, std::move(u), std::move(v),
                                std::move(w));
    CostModel costs = CostsFromArgs(g.costs, l * m * n, g.seed, params);
    return InstanceFile{inst.set, std::move(costs), std::nullopt,
                        std::nullopt, Provenance{g.family, params, g.seed}};
  }
  if (g.family == "random") {
    RandomParams p = g.random;
    if (g.cost_kind != "box" && g.cost_kind != "list") {
      throw ValidationError("--cost-kind must be 'box' or 'list'");
    }
    p.box_costs = g.cost_kind == "box";
    p.entry_min = g.entry_min;
    p.entry_max = g.entry_max;
    p.lower_min = g.lower_min;
    p.lower_max = g.lower_max;
    p.bound_width = g.bound_width;
    p.cost_min = g.cost_min;
    p.cost_max = g.cost_max;
    p.box_width = g.box_width;
    params = {{"rows", p.rows},
              {"cols", p.cols},
              {"entry_range", {g.entry_min, g.entry_max}},
              {"lower_range", {g.lower_min, g.lower_max}},
              {"bound_width", g.bound_width},
              {"cost_kind", g.cost_kind},
              {"num_costs", p.num_costs},
              {"cost_range", {g.cost_min, g.cost_max}},
              {"box_width", g.box_width},
              {"max_points", p.max_points}};
    RandomInstance inst = GenRandom(p, g.seed);
    CostModel costs = HasExplicitCosts(g.costs)
                          ? CostsFromArgs(g.costs, p.cols, g.seed, params)
                          : inst.costs;
    return InstanceFile{inst.set, std::move(costs), std::nullopt,
                        inst.reference_point,
                        Provenance{g.family, params, g.seed}};
  }
  throw ValidationError("unknown family '" + g.family + "'");
}

fs::path CacheDir(const fs::path& instance_path) {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env) {
    return env;
  }
  fs::path dir = instance_path.parent_path();
  return dir.empty() ? fs::path(".") : dir;
}

// Loads the cached basis for `a` or computes and stores it.
GraverBasis AutoGraver(const IntMatrix& a, const fs::path& instance_path,
                       const GraverLimits& limits, std::ostream& out) {
  const std::string sha = MatrixFingerprint(a);
  const fs::path dir = CacheDir(instance_path);
  const fs::path cached = dir / (sha + ".graver.json");
  if (fs::exists(cached)) {
    GraverBasis basis = GraverFromJson(ReadJsonFile(cached));
    if (basis.matrix_sha() == sha && basis.num_vars() == a.cols()) {
      out << "graver: cache hit " << cached.string() << "\n";
      return basis;
    }
  }
  GraverBasis basis = ComputeGraver(a, limits);
  fs::create_directories(dir);
  WriteJsonFile(cached, GraverToJson(basis));
  out << "graver: computed " << basis.size() << " elements, cached at "
      << cached.string() << "\n";
  return basis;
}

struct SolveArgs {
  std::string variant;
  std::string instance;
  std::string graver;
  bool auto_graver = false;
  std::string out;
  bool timing = false;
  uint64_t max_elements = GraverLimits{}.max_elements;
  uint64_t max_pairs = GraverLimits{}.max_pair_operations;
  RobustOptions options;
};

int RunSolve(const SolveArgs& s, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const InstanceFile inst = InstanceFromJson(ReadJsonFile(s.instance));
  const RobustVariant variant = ParseVariant(s.variant);
  const bool list_variant = variant == RobustVariant::kMinMaxList ||
                            variant == RobustVariant::kMaxMinList;
  if (list_variant != inst.costs.is_list()) {
    throw ValidationError("variant " + s.variant + " does not match the " +
                          (inst.costs.is_list() ? "list" : "box") +
                          " cost model of " + s.instance);
  }
  std::optional<GraverBasis> basis;
  const std::string sha = MatrixFingerprint(inst.set.a());
  if (!s.graver.empty()) {
    basis = GraverFromJson(ReadJsonFile(s.graver));
  } else if (s.auto_graver) {
    basis = AutoGraver(inst.set.a(), s.instance,
                       GraverLimits{s.max_elements, s.max_pairs}, out);
  } else if (inst.known_graver.has_value()) {
    basis = GraverBasis(inst.set.num_vars(), sha, *inst.known_graver);
  }
  if (basis.has_value() && basis->matrix_sha() != sha) {
    throw ValidationError("Graver basis was computed for a different matrix");
  }
  if (variant != RobustVariant::kMinMaxList && !basis.has_value()) {
    throw ValidationError("variant " + s.variant +
                          " needs --graver, --auto-graver or known_graver");
  }
  RobustOptions options = s.options;
  if (!options.hint.has_value()) options.hint = inst.feasible_hint;
  const RobustReport report =
      SolveRobust(variant, inst.set, inst.costs,
                  basis.has_value() ? &*basis : nullptr, options);
  ResultFile result = MakeResultFile(report, InstanceFingerprint(inst));
  if (s.timing) {
    result.wall_time_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  if (!s.out.empty()) WriteJsonFile(s.out, ResultToJson(result));
  out << "variant " << VariantName(variant) << " value " << report.value
      << " method " << MethodName(report.method) << "\n"
      << (IsMinMax(variant) ? "x* " : "c* ") << ToString(report.optimizer)
      << "\n"
      << (IsMinMax(variant) ? "argmax c " : "argmin x ")
      << ToString(report.witness) << "\n";
  if (s.out.empty()) out << SerializeJson(ResultToJson(result));
  return kExitOk;
}

Json CheckToJson(const CheckResult& c) {
  return {{"name", c.name},
          {"passed", c.passed},
          {"detail", c.detail},
          {"counterexample", VectorsJson(c.counterexample)}};
}

struct VerifyArgs {
  std::string instance;
  std::string matrix;
  std::string result;
  std::string graver;
  int64_t radius = 0;
  std::string out;
};

int RunVerify(const VerifyArgs& v, std::ostream& out) {
  if (v.instance.empty() && v.matrix.empty()) {
    throw ValidationError("verify needs --instance or --matrix");
  }
  if (v.result.empty() && v.graver.empty()) {
    throw ValidationError("verify needs --result or --graver");
  }
  std::optional<InstanceFile> inst;
  IntMatrix a;
  if (!v.instance.empty()) {
    inst = InstanceFromJson(ReadJsonFile(v.instance));
    a = inst->set.a();
  } else {
    a = MatrixFileFromJson(ReadJsonFile(v.matrix));
  }
  std::optional<GraverBasis> basis;
  if (!v.graver.empty()) {
    basis = GraverFromJson(ReadJsonFile(v.graver));
  } else if (inst.has_value() && inst->known_graver.has_value()) {
    basis = GraverBasis(a.cols(), MatrixFingerprint(a), *inst->known_graver);
  }

  std::vector<CheckResult> checks;
  if (!v.graver.empty()) {
    CheckResult fp("fingerprint");
    if (basis->matrix_sha() != MatrixFingerprint(a) ||
        basis->num_vars() != a.cols()) {
      fp.passed = false;
      fp.detail = "Graver file was computed for a different matrix";
    }
    checks.push_back(fp);
    if (fp.passed) {
      Int radius = v.radius;
      if (radius < 1) {
        radius = 1;
        for (const auto& g : basis->elements()) {
          radius = std::max(radius, MaxAbs(g));
        }
      }
      GraverVerification gv = VerifyGraver(a, *basis, radius);
      for (auto& c : gv.checks) checks.push_back(std::move(c));
    }
  }
  if (!v.result.empty()) {
    if (!inst.has_value()) {
      throw ValidationError("verifying a result needs --instance");
    }
    const ResultFile result = ResultFromJson(ReadJsonFile(v.result));
    CheckResult fp("instance_fingerprint");
    if (result.instance_sha != InstanceFingerprint(*inst)) {
      fp.passed = false;
      fp.detail = "result was produced for a different instance";
    }
    checks.push_back(fp);
    const RobustReport report = ReportFromResult(result);
    CheckResult match("variant_matches_costs");
    const bool list_variant = result.variant == RobustVariant::kMinMaxList ||
                              result.variant == RobustVariant::kMaxMinList;
    if (list_variant != inst->costs.is_list()) {
      match.passed = false;
      match.detail = "variant does not fit the cost model";
    }
    checks.push_back(match);
    if (match.passed) {
      checks.push_back(CheckWitnessConsistency(report, inst->set, inst->costs));
      if (basis.has_value() && basis->matrix_sha() == MatrixFingerprint(a) &&
          checks.back().passed) {
        checks.push_back(
            CheckGraverCertificate(report, inst->set, inst->costs, *basis));
      }
    }
  }
  bool passed = true;
  Json report = {{"checks", Json::array()}};
  for (const auto& c : checks) {
    passed = passed && c.passed;
    report["checks"].push_back(CheckToJson(c));
    out << (c.passed ? "PASS " : "FAIL ") << c.name
        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  report["passed"] = passed;
  if (!v.out.empty()) WriteJsonFile(v.out, report);
  out << SerializeJson(report);
  return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact robust integer programming over Graver bases"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd
      ->add_option("family", gen.family,
                   "partition-minmax, partition-maxmin, mcf, transport3 or "
                   "random")
      ->required();
  gen_cmd->add_option("--out,-o", gen.out, "Output instance file")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--a", gen.a, "Partition entries, e.g. 1,2,3");
  gen_cmd->add_option("--supply", gen.supply, "Supplies s[k][i], rows by ';'");
  gen_cmd->add_option("--demand", gen.demand, "Demands d[k][j]");
  gen_cmd->add_option("--capacity", gen.capacity, "Capacities u[i][j]");
  gen_cmd->add_option("--u", gen.u, "Line sums u[j][k]");
  gen_cmd->add_option("--v", gen.v, "Line sums v[i][k]");
  gen_cmd->add_option("--w", gen.w, "Line sums w[i][j]");
  gen_cmd->add_option("--cost-lower", gen.costs.lower, "Cost box lower end");
  gen_cmd->add_option("--cost-upper", gen.costs.upper, "Cost box upper end");
  gen_cmd->add_option("--cost-list", gen.costs.list, "Cost vectors by ';'");
  gen_cmd->add_option("--rows", gen.random.rows, "Random: matrix rows");
  gen_cmd->add_option("--cols", gen.random.cols, "Random: variables");
  gen_cmd->add_option("--entry-min", gen.entry_min);
  gen_cmd->add_option("--entry-max", gen.entry_max);
  gen_cmd->add_option("--lower-min", gen.lower_min);
  gen_cmd->add_option("--lower-max", gen.lower_max);
  gen_cmd->add_option("--bound-width", gen.bound_width);
  gen_cmd->add_option("--cost-kind", gen.cost_kind, "Random: box or list");
  gen_cmd->add_option("--num-costs", gen.random.num_costs);
  gen_cmd->add_option("--cost-min", gen.cost_min);
  gen_cmd->add_option("--cost-max", gen.cost_max);
  gen_cmd->add_option("--box-width", gen.box_width);
  gen_cmd->add_option("--max-points", gen.random.max_points);

  std::string graver_in, graver_matrix, graver_out;
  GraverLimits graver_limits;
  CLI::App* graver_cmd =
      app.add_subcommand("graver", "Compute the Graver basis of a matrix");
  graver_cmd->add_option("--instance", graver_in, "Instance file");
  graver_cmd->add_option("--matrix", graver_matrix, "Matrix file");
  graver_cmd->add_option("--out,-o", graver_out, "Output Graver file")
      ->required();
  graver_cmd->add_option("--max-elements", graver_limits.max_elements);
  graver_cmd->add_option("--max-pairs", graver_limits.max_pair_operations);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a robust variant");
  solve_cmd
      ->add_option("--variant", solve.variant,
                   "minmax-box, maxmin-list, minmax-list-exact or "
                   "maxmin-box-exact")
      ->required();
  solve_cmd->add_option("--instance", solve.instance, "Instance file")
      ->required();
  solve_cmd->add_option("--graver", solve.graver, "Graver basis file");
  solve_cmd->add_flag("--auto-graver", solve.auto_graver,
                      "Compute or reuse a cached Graver basis");
  solve_cmd->add_option("--out,-o", solve.out, "Output result file");
  solve_cmd->add_flag("--timing", solve.timing,
                      "Record wall time in the result file");
  solve_cmd->add_option("--max-iterations",
                        solve.options.augmentation.max_iterations);
  solve_cmd->add_option("--max-points", solve.options.max_points);
  solve_cmd->add_option("--max-nodes", solve.options.max_nodes);
  solve_cmd->add_option("--max-box-volume", solve.options.max_box_volume);
  solve_cmd->add_option("--max-elements", solve.max_elements);
  solve_cmd->add_option("--max-pairs", solve.max_pairs);

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Verify a result or Graver file");
  verify_cmd->add_option("--instance", verify.instance, "Instance file");
  verify_cmd->add_option("--matrix", verify.matrix, "Matrix file");
  verify_cmd->add_option("--result", verify.result, "Result file");
  verify_cmd->add_option("--graver", verify.graver, "Graver basis file");
  verify_cmd->add_option("--radius", verify.radius,
                         "Completeness radius (default: largest entry)");
  verify_cmd->add_option("--out,-o", verify.out, "Output report file");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("robust_ip");
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*gen_cmd) {
      InstanceFile inst = GenerateInstance(gen);
      WriteJsonFile(gen.out, InstanceToJson(inst));
      out << "wrote " << gen.out << "\n";
      return kExitOk;
    }
    if (*graver_cmd) {
      IntMatrix a;
      if (!graver_in.empty()) {
        a = InstanceFromJson(ReadJsonFile(graver_in)).set.a();
      } else if (!graver_matrix.empty()) {
        a = MatrixFileFromJson(ReadJsonFile(graver_matrix));
      } else {
        throw ValidationError("graver needs --instance or --matrix");
      }
      GraverBasis basis = ComputeGraver(a, graver_limits);
      WriteJsonFile(graver_out, GraverToJson(basis));
      out << basis.size() << " elements\n";
      return kExitOk;
    }
    if (*solve_cmd) return RunSolve(solve, out);
    if (*verify_cmd) return RunVerify(verify, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ResourceLimitError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace robust_ip
