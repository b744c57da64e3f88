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

#include "robust_ip/io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <utility>

#include <unistd.h>

namespace robust_ip {
namespace {

constexpr int64_t kMaxPlainJsonInt = int64_t{1} << 53;

const Json& Field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path + "." + key + ": missing field");
  }
  return *it;
}

uint64_t CountFromJson(const Json& j, const std::string& path) {
  const Int v = IntFromJson(j, path);
  if (v < 0) throw ParseError(path + ": expected a nonnegative integer");
  return static_cast<uint64_t>(v.value());
}

std::string StringFromJson(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

std::vector<IntVector> VectorListFromJson(const Json& j,
                                          const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  std::vector<IntVector> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(VectorFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json VectorListToJson(const std::vector<IntVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(VectorToJson(v));
  return arr;
}

void CheckLength(const IntVector& v, size_t n, const std::string& path) {
  if (v.size() != n) {
    throw ParseError(path + ": length " + std::to_string(v.size()) +
                     ", expected " + std::to_string(n));
  }
}

void CheckSchema(const Json& j) {
  const Int version = IntFromJson(Field(j, "schema_version", "$"),
                                  "$.schema_version");
  if (version != kSchemaVersion) {
    throw ParseError("$.schema_version: unsupported version " +
                     version.ToString());
  }
}

}  // namespace

Json IntToJson(Int v) {
  if (v >= -kMaxPlainJsonInt && v <= kMaxPlainJsonInt) return v.value();
  return v.ToString();
}

Int IntFromJson(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<uint64_t>() >
            static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
      throw ParseError(path + ": integer out of range");
    }
    return j.get<int64_t>();
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError(path + ": '" + s + "' is not a decimal integer in range");
    }
    return v;
  }
  if (j.is_null()) throw ParseError(path + ": value is null (unbounded?)");
  throw ParseError(path + ": expected an integer");
}

Json VectorToJson(std::span<const Int> v) {
  Json arr = Json::array();
  for (Int x : v) arr.push_back(IntToJson(x));
  return arr;
}

IntVector VectorFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  IntVector v;
  v.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    v.push_back(IntFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Json MatrixToJson(const IntMatrix& a) {
  Json rows = Json::array();
  for (size_t r = 0; r < a.rows(); ++r) rows.push_back(VectorToJson(a.Row(r)));
  return rows;
}

IntMatrix MatrixFromJson(const Json& rows, size_t cols,
                         const std::string& path) {
  std::vector<IntVector> parsed = VectorListFromJson(rows, path);
  for (size_t r = 0; r < parsed.size(); ++r) {
    CheckLength(parsed[r], cols, path + "[" + std::to_string(r) + "]");
  }
  return IntMatrix::FromRows(parsed, cols);
}

Json InstanceToJson(const InstanceFile& inst) {
  const StandardFormSet& x = inst.set;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["set"] = {{"A", MatrixToJson(x.a())},
              {"b", VectorToJson(x.b())},
              {"lower", VectorToJson(x.lower())},
              {"upper", VectorToJson(x.upper())},
              {"n", x.num_vars()}};
  if (inst.costs.is_list()) {
    j["costs"] = {{"kind", "list"},
                  {"vectors", VectorListToJson(inst.costs.list())}};
  } else {
    j["costs"] = {{"kind", "box"},
                  {"d", VectorToJson(inst.costs.lower())},
                  {"e", VectorToJson(inst.costs.upper())}};
  }
  if (inst.known_graver.has_value()) {
    j["known_graver"] = VectorListToJson(*inst.known_graver);
  }
  if (inst.feasible_hint.has_value()) {
    j["feasible_hint"] = VectorToJson(*inst.feasible_hint);
  }
  if (inst.provenance.has_value()) {
    Json p = {{"generator", inst.provenance->generator},
              {"parameters", inst.provenance->parameters}};
    if (inst.provenance->seed.has_value()) p["seed"] = *inst.provenance->seed;
    j["provenance"] = std::move(p);
  }
  return j;
}

InstanceFile InstanceFromJson(const Json& j) {
  CheckSchema(j);
  const Json& s = Field(j, "set", "$");
  const size_t n = CountFromJson(Field(s, "n", "$.set"), "$.set.n");
  IntMatrix a = MatrixFromJson(Field(s, "A", "$.set"), n, "$.set.A");
  IntVector b = VectorFromJson(Field(s, "b", "$.set"), "$.set.b");
  CheckLength(b, a.rows(), "$.set.b");
  IntVector lower = VectorFromJson(Field(s, "lower", "$.set"), "$.set.lower");
  IntVector upper = VectorFromJson(Field(s, "upper", "$.set"), "$.set.upper");
  CheckLength(lower, n, "$.set.lower");
  CheckLength(upper, n, "$.set.upper");
  for (size_t i = 0; i < n; ++i) {
    if (lower[i] > upper[i]) {
      throw ParseError("$.set.lower[" + std::to_string(i) +
                       "]: exceeds the upper bound");
    }
  }

  const Json& c = Field(j, "costs", "$");
  const std::string kind = StringFromJson(Field(c, "kind", "$.costs"),
                                          "$.costs.kind");
  std::optional<CostModel> costs;
  if (kind == "list") {
    auto vectors = VectorListFromJson(Field(c, "vectors", "$.costs"),
                                      "$.costs.vectors");
    if (vectors.empty()) throw ParseError("$.costs.vectors: empty list");
    for (size_t k = 0; k < vectors.size(); ++k) {
      CheckLength(vectors[k], n, "$.costs.vectors[" + std::to_string(k) + "]");
    }
    costs = CostModel::List(std::move(vectors));
  } else if (kind == "box") {
    IntVector d = VectorFromJson(Field(c, "d", "$.costs"), "$.costs.d");
    IntVector e = VectorFromJson(Field(c, "e", "$.costs"), "$.costs.e");
    CheckLength(d, n, "$.costs.d");
    CheckLength(e, n, "$.costs.e");
    for (size_t i = 0; i < n; ++i) {
      if (d[i] > e[i]) {
        throw ParseError("$.costs.d[" + std::to_string(i) +
                         "]: exceeds $.costs.e");
      }
    }
    costs = CostModel::Box(std::move(d), std::move(e));
  } else {
    throw ParseError("$.costs.kind: expected 'list' or 'box', got '" + kind +
                     "'");
  }

  InstanceFile inst{StandardFormSet(std::move(a), std::move(b),
                                    std::move(lower), std::move(upper)),
                    *std::move(costs), std::nullopt, std::nullopt,
                    std::nullopt};
  if (auto it = j.find("known_graver"); it != j.end()) {
    auto elems = VectorListFromJson(*it, "$.known_graver");
    for (size_t k = 0; k < elems.size(); ++k) {
      CheckLength(elems[k], n, "$.known_graver[" + std::to_string(k) + "]");
    }
    inst.known_graver = std::move(elems);
  }
  if (auto it = j.find("feasible_hint"); it != j.end()) {
    IntVector hint = VectorFromJson(*it, "$.feasible_hint");
    CheckLength(hint, n, "$.feasible_hint");
    inst.feasible_hint = std::move(hint);
  }
  if (auto it = j.find("provenance"); it != j.end()) {
    Provenance p;
    p.generator = StringFromJson(Field(*it, "generator", "$.provenance"),
                                 "$.provenance.generator");
    if (auto pit = it->find("parameters"); pit != it->end()) {
      p.parameters = *pit;
    }
    if (auto sit = it->find("seed"); sit != it->end()) {
      p.seed = CountFromJson(*sit, "$.provenance.seed");
    }
    inst.provenance = std::move(p);
  }
  return inst;
}

std::string InstanceFingerprint(const InstanceFile& inst) {
  return Sha256Hex(InstanceToJson(inst).dump());
}

Json GraverToJson(const GraverBasis& basis) {
  return {{"matrix_sha", basis.matrix_sha()},
          {"n", basis.num_vars()},
          {"elements", VectorListToJson(basis.elements())},
          {"negation_closed", true}};
}

GraverBasis GraverFromJson(const Json& j) {
  const std::string sha =
      StringFromJson(Field(j, "matrix_sha", "$"), "$.matrix_sha");
  const size_t n = CountFromJson(Field(j, "n", "$"), "$.n");
  const Json& flag = Field(j, "negation_closed", "$");
  if (!flag.is_boolean() || !flag.get<bool>()) {
    throw ParseError("$.negation_closed: must be true");
  }
  auto elems = VectorListFromJson(Field(j, "elements", "$"), "$.elements");
  for (size_t k = 0; k < elems.size(); ++k) {
    CheckLength(elems[k], n, "$.elements[" + std::to_string(k) + "]");
    if (IsZero(elems[k])) {
      throw ParseError("$.elements[" + std::to_string(k) + "]: zero vector");
    }
  }
  return GraverBasis(n, sha, std::move(elems));
}

ResultFile MakeResultFile(const RobustReport& report,
                          const std::string& instance_sha) {
  return ResultFile{instance_sha,
                    report.variant,
                    report.value,
                    report.optimizer,
                    report.witness,
                    report.method,
                    report.augmentation_steps,
                    report.inner_solves,
                    report.enumerated_points,
                    std::nullopt};
}

RobustReport ReportFromResult(const ResultFile& result) {
  RobustReport report;
  report.variant = result.variant;
  report.value = result.value;
  report.optimizer = result.optimizer;
  report.witness = result.witness;
  report.method = result.method;
  report.augmentation_steps = result.augmentation_steps;
  report.inner_solves = result.inner_solves;
  report.enumerated_points = result.enumerated_points;
  return report;
}

Json ResultToJson(const ResultFile& r) {
  Json j = {{"schema_version", kSchemaVersion},
            {"instance_sha", r.instance_sha},
            {"variant", VariantName(r.variant)},
            {"value", IntToJson(r.value)},
            {"optimizer", VectorToJson(r.optimizer)},
            {"witness", VectorToJson(r.witness)},
            {"method", MethodName(r.method)},
            {"trace",
             {{"augmentation_steps", r.augmentation_steps},
              {"inner_solves", r.inner_solves},
              {"enumerated_points", r.enumerated_points}}}};
  if (r.wall_time_ms.has_value()) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

ResultFile ResultFromJson(const Json& j) {
  CheckSchema(j);
  ResultFile r;
  r.instance_sha =
      StringFromJson(Field(j, "instance_sha", "$"), "$.instance_sha");
  try {
    r.variant = ParseVariant(StringFromJson(Field(j, "variant", "$"),
                                            "$.variant"));
    r.method = ParseMethod(StringFromJson(Field(j, "method", "$"),
                                          "$.method"));
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  r.value = IntFromJson(Field(j, "value", "$"), "$.value");
  r.optimizer = VectorFromJson(Field(j, "optimizer", "$"), "$.optimizer");
  r.witness = VectorFromJson(Field(j, "witness", "$"), "$.witness");
  const Json& t = Field(j, "trace", "$");
  r.augmentation_steps = CountFromJson(
      Field(t, "augmentation_steps", "$.trace"), "$.trace.augmentation_steps");
  r.inner_solves = CountFromJson(Field(t, "inner_solves", "$.trace"),
                                 "$.trace.inner_solves");
  r.enumerated_points = CountFromJson(
      Field(t, "enumerated_points", "$.trace"), "$.trace.enumerated_points");
  if (auto it = j.find("wall_time_ms"); it != j.end()) {
    if (!it->is_number()) throw ParseError("$.wall_time_ms: expected a number");
    r.wall_time_ms = it->get<double>();
  }
  return r;
}

IntMatrix MatrixFileFromJson(const Json& j) {
  const size_t n = CountFromJson(Field(j, "n", "$"), "$.n");
  return MatrixFromJson(Field(j, "A", "$"), n, "$.A");
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string SerializeJson(const Json& j) { return j.dump(2) + "\n"; }

void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(tmp.string() + ": cannot open for writing");
    out << SerializeJson(j);
    if (!out) throw Error(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace robust_ip
