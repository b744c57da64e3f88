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

#ifndef ROBUST_IP_IO_H_
#define ROBUST_IP_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "robust_ip/core.h"
#include "robust_ip/graver.h"
#include "robust_ip/robust.h"

namespace robust_ip {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Raised for malformed files; the message names the offending JSON path.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Integers of magnitude at most 2^53 are plain JSON numbers, larger ones
// decimal strings. Both forms are accepted on input.
Json IntToJson(Int v);
Int IntFromJson(const Json& j, const std::string& path);
Json VectorToJson(std::span<const Int> v);
IntVector VectorFromJson(const Json& j, const std::string& path);
Json MatrixToJson(const IntMatrix& a);
IntMatrix MatrixFromJson(const Json& rows, size_t cols,
                         const std::string& path);

struct Provenance {
  std::string generator;
  Json parameters = Json::object();
  std::optional<uint64_t> seed;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct InstanceFile {
  StandardFormSet set;
  CostModel costs;
  std::optional<std::vector<IntVector>> known_graver;
  std::optional<IntVector> feasible_hint;
  std::optional<Provenance> provenance;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

Json InstanceToJson(const InstanceFile& inst);
InstanceFile InstanceFromJson(const Json& j);
// SHA-256 of the compact canonical serialization.
std::string InstanceFingerprint(const InstanceFile& inst);

Json GraverToJson(const GraverBasis& basis);
GraverBasis GraverFromJson(const Json& j);

struct ResultFile {
  std::string instance_sha;
  RobustVariant variant = RobustVariant::kMinMaxBox;
  Int value;
  IntVector optimizer;
  IntVector witness;
  SolveMethod method = SolveMethod::kGraver;
  uint64_t augmentation_steps = 0;
  uint64_t inner_solves = 0;
  uint64_t enumerated_points = 0;
  std::optional<double> wall_time_ms;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile MakeResultFile(const RobustReport& report,
                          const std::string& instance_sha);
// The fields a verifier needs, without traces.
RobustReport ReportFromResult(const ResultFile& result);
Json ResultToJson(const ResultFile& result);
ResultFile ResultFromJson(const Json& j);

// Matrix-only file: {"A": [[...]], "n": cols}.
IntMatrix MatrixFileFromJson(const Json& j);

Json ReadJsonFile(const std::filesystem::path& path);
// Two-space indentation, sorted keys, trailing newline. Written to a
// temporary file in the same directory and renamed into place.
void WriteJsonFile(const std::filesystem::path& path, const Json& j);
std::string SerializeJson(const Json& j);

}  // namespace robust_ip

#endif  // ROBUST_IP_IO_H_
