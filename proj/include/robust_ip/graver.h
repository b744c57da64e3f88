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

#ifndef ROBUST_IP_GRAVER_H_
#define ROBUST_IP_GRAVER_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "robust_ip/core.h"

namespace robust_ip {

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(const std::string& data);

// Hex SHA-256 of the canonical text form "<rows>x<cols>:" followed by the
// entries in row-major order, comma separated, rows separated by ';'.
std::string MatrixFingerprint(const IntMatrix& a);

// Flips the sign so that the first nonzero entry is positive.
IntVector CanonicalSign(IntVector v);

// The Graver basis of a matrix, stored as one representative per antipodal
// pair (first nonzero entry positive), sorted lexicographically. The full
// basis is elements() together with their negations.
class GraverBasis {
 public:
  GraverBasis(size_t num_vars, std::string matrix_sha,
              std::vector<IntVector> elements);

  size_t num_vars() const { return num_vars_; }
  const std::string& matrix_sha() const { return matrix_sha_; }
  const std::vector<IntVector>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  // elements() and their negations, sorted lexicographically.
  std::vector<IntVector> FullSet() const;

  friend bool operator==(const GraverBasis&, const GraverBasis&) = default;

 private:
  size_t num_vars_;
  std::string matrix_sha_;
  std::vector<IntVector> elements_;
};

// A lattice basis of ker(A) intersected with Z^n, computed by unimodular row
// reduction of [A^T | I].
std::vector<IntVector> IntegerKernelBasis(const IntMatrix& a);

struct GraverLimits {
  size_t max_elements = 100'000;
  uint64_t max_pair_operations = 10'000'000;
};

struct GraverStats {
  size_t kernel_rank = 0;
  uint64_t pair_operations = 0;
  uint64_t reductions = 0;
  size_t completed_size = 0;
};

// Exact Graver basis by completion: start from a symmetric lattice generating
// set, add the normal form of every pairwise sum until closed, then keep the
// conformally minimal elements. Throws ResourceLimitError when a cap is hit.
GraverBasis ComputeGraver(const IntMatrix& a, const GraverLimits& limits = {},
                          GraverStats* stats = nullptr);

// All conformally minimal nonzero kernel vectors with entries in
// [-radius, radius], by direct enumeration. Returned as the canonical half,
// sorted. Equals the Graver basis whenever radius bounds its entries.
std::vector<IntVector> BruteForceGraver(const IntMatrix& a, Int radius,
                                        uint64_t max_nodes = 100'000'000);

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<IntVector> counterexample;
};

struct GraverVerification {
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult& Find(const std::string& name) const;
};

// Checks "kernel" (A g = 0, g != 0), "minimality" (pairwise conformal
// incomparability of the full set) and "completeness" (every nonzero kernel
// point within radius reduces to zero by greedy conformal subtraction).
GraverVerification VerifyGraver(const IntMatrix& a, const GraverBasis& basis,
                                Int radius, uint64_t max_nodes = 100'000'000);

// The (r + n s) x (n t) matrix with A1 repeated across the top band and A2
// on the block diagonal.
IntMatrix NFoldProduct(const IntMatrix& a1, const IntMatrix& a2, size_t n);

}  // namespace robust_ip

#endif  // ROBUST_IP_GRAVER_H_
