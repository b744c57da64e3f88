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

#include "robust_ip/graver.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <utility>

#include "robust_ip/enumerate.h"

namespace robust_ip {

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string MatrixFingerprint(const IntMatrix& a) {
  std::ostringstream os;
  os << a.rows() << 'x' << a.cols() << ':';
  for (size_t r = 0; r < a.rows(); ++r) {
    if (r > 0) os << ';';
    for (size_t c = 0; c < a.cols(); ++c) {
      if (c > 0) os << ',';
      os << a(r, c);
    }
  }
  return Sha256Hex(os.str());
}

IntVector CanonicalSign(IntVector v) {
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : v) y = -y;
    }
    break;
  }
  return v;
}

GraverBasis::GraverBasis(size_t num_vars, std::string matrix_sha,
                         std::vector<IntVector> elements)
    : num_vars_(num_vars), matrix_sha_(std::move(matrix_sha)) {
  for (auto& g : elements) {
    if (g.size() != num_vars_) {
      throw DimensionError("Graver element " + ToString(g) +
                           " has wrong length, expected " +
                           std::to_string(num_vars_));
    }
    if (IsZero(g)) throw ValidationError("Graver element is zero");
    elements_.push_back(CanonicalSign(std::move(g)));
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

std::vector<IntVector> GraverBasis::FullSet() const {
  std::vector<IntVector> full;
  full.reserve(2 * elements_.size());
  for (const auto& g : elements_) {
    full.push_back(g);
    full.push_back(Negate(g));
  }
  std::sort(full.begin(), full.end());
  return full;
}

std::vector<IntVector> IntegerKernelBasis(const IntMatrix& a) {
  const size_t m = a.rows();
  const size_t n = a.cols();
  // Row i of `work` is (column i of A, unit vector e_i).
  std::vector<IntVector> work(n, IntVector(m + n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < m; ++r) work[i][r] = a(r, i);
    work[i][m + i] = 1;
  }
  size_t pivot = 0;
  for (size_t col = 0; col < m && pivot < n; ++col) {
    while (true) {
      size_t best = n;
      for (size_t r = pivot; r < n; ++r) {
        if (work[r][col] == 0) continue;
        if (best == n || Abs(work[r][col]) < Abs(work[best][col])) best = r;
      }
      if (best == n) break;
      std::swap(work[pivot], work[best]);
      bool cleared = true;
      for (size_t r = pivot + 1; r < n; ++r) {
        if (work[r][col] == 0) continue;
        const Int q = FloorDiv(work[r][col], work[pivot][col]);
        work[r] = AddScaled(work[r], -q, work[pivot]);
        if (work[r][col] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVector> kernel;
  for (size_t r = pivot; r < n; ++r) {
    kernel.emplace_back(work[r].begin() + static_cast<ptrdiff_t>(m),
                        work[r].end());
  }
  return kernel;
}

namespace {

// Sign support of a vector as two bitsets, used to reject conformal
// comparisons without touching the entries.
struct SignMask {
  std::vector<uint64_t> pos;
  std::vector<uint64_t> neg;

  explicit SignMask(std::span<const Int> v)
      : pos((v.size() + 63) / 64), neg((v.size() + 63) / 64) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] > 0) pos[i / 64] |= uint64_t{1} << (i % 64);
      if (v[i] < 0) neg[i / 64] |= uint64_t{1} << (i % 64);
    }
  }

  bool SubsetOf(const SignMask& o) const {
    for (size_t w = 0; w < pos.size(); ++w) {
      if ((pos[w] & ~o.pos[w]) != 0 || (neg[w] & ~o.neg[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool SignCompatible(const SignMask& o) const {
    for (size_t w = 0; w < pos.size(); ++w) {
      if ((pos[w] & o.neg[w]) != 0 || (neg[w] & o.pos[w]) != 0) return false;
    }
    return true;
  }
};

bool MagnitudeLeq(std::span<const Int> x, std::span<const Int> y) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (Abs(x[i]) > Abs(y[i])) return false;
  }
  return true;
}

class Completion {
 public:
  Completion(size_t n, const GraverLimits& limits, GraverStats& stats)
      : n_(n), limits_(limits), stats_(stats) {}

  size_t size() const { return elements_.size(); }

  void Insert(IntVector v) {
    if (elements_.size() >= limits_.max_elements) {
      throw ResourceLimitError("Graver completion exceeded " +
                               std::to_string(limits_.max_elements) +
                               " elements");
    }
    const size_t index = elements_.size();
    masks_.emplace_back(v);
    elements_.push_back(std::move(v));
    auto pos = std::lower_bound(
        lex_order_.begin(), lex_order_.end(), index,
        [&](size_t lhs, size_t rhs) { return elements_[lhs] < elements_[rhs]; });
    lex_order_.insert(pos, index);
  }

  void ProcessPair(size_t i, size_t k) {
    // Sign-compatible sums are already conformal sums of f and g.
    if (masks_[i].SignCompatible(masks_[k])) return;
    if (++stats_.pair_operations > limits_.max_pair_operations) {
      throw ResourceLimitError("Graver completion exceeded " +
                               std::to_string(limits_.max_pair_operations) +
                               " pair operations");
    }
    IntVector s = Add(elements_[i], elements_[k]);
    if (IsZero(s)) return;
    NormalForm(s);
    if (IsZero(s)) return;
    IntVector neg = Negate(s);
    if (neg < s) std::swap(s, neg);
    Insert(std::move(s));
    Insert(std::move(neg));
  }

  // The conformally minimal elements, in lexicographic order.
  std::vector<IntVector> MinimalElements() const {
    std::vector<IntVector> result;
    for (size_t idx : lex_order_) {
      bool minimal = true;
      for (size_t other = 0; other < elements_.size() && minimal; ++other) {
        if (other == idx) continue;
        if (masks_[other].SubsetOf(masks_[idx]) &&
            MagnitudeLeq(elements_[other], elements_[idx])) {
          minimal = false;
        }
      }
      if (minimal) result.push_back(elements_[idx]);
    }
    return result;
  }

 private:
  // Subtracts the lexicographically smallest element conformally below the
  // remainder until none applies.
  void NormalForm(IntVector& s) {
    while (true) {
      const SignMask mask(s);
      bool reduced = false;
      for (size_t idx : lex_order_) {
        if (masks_[idx].SubsetOf(mask) && MagnitudeLeq(elements_[idx], s)) {
          for (size_t j = 0; j < n_; ++j) s[j] -= elements_[idx][j];
          ++stats_.reductions;
          reduced = true;
          break;
        }
      }
      if (!reduced || IsZero(s)) return;
    }
  }

  const size_t n_;
  const GraverLimits& limits_;
  GraverStats& stats_;
  std::vector<IntVector> elements_;
  std::vector<SignMask> masks_;
  std::vector<size_t> lex_order_;
};

}  // namespace

GraverBasis ComputeGraver(const IntMatrix& a, const GraverLimits& limits,
                          GraverStats* stats) {
  if (a.cols() == 0) {
    throw ValidationError("Graver basis requires at least one column");
  }
  GraverStats local;
  GraverStats& st = stats != nullptr ? *stats : local;
  st = GraverStats{};

  std::vector<IntVector> generators = IntegerKernelBasis(a);
  st.kernel_rank = generators.size();
  const size_t rank = generators.size();
  for (size_t i = 0; i < rank; ++i) {
    generators.push_back(Negate(generators[i]));
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Completion completion(a.cols(), limits, st);
  for (auto& g : generators) completion.Insert(std::move(g));
  // Pairs are queued in insertion order of their later element.
  for (size_t k = 1; k < completion.size(); ++k) {
    for (size_t i = 0; i < k; ++i) completion.ProcessPair(i, k);
  }
  st.completed_size = completion.size();
  return GraverBasis(a.cols(), MatrixFingerprint(a),
                     completion.MinimalElements());
}

namespace {

StandardFormSet KernelBox(const IntMatrix& a, Int radius) {
  if (radius < 1) throw ValidationError("radius must be at least 1");
  return StandardFormSet(a, IntVector(a.rows()), IntVector(a.cols(), -radius),
                         IntVector(a.cols(), radius));
}

bool HasCanonicalSign(std::span<const Int> v) {
  for (Int x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

Int NormL1(std::span<const Int> v) {
  Int s = 0;
  for (Int x : v) s += Abs(x);
  return s;
}

}  // namespace

std::vector<IntVector> BruteForceGraver(const IntMatrix& a, Int radius,
                                        uint64_t max_nodes) {
  std::vector<IntVector> points;
  ForEachFeasiblePoint(
      KernelBox(a, radius),
      [&](std::span<const Int> z) {
        if (HasCanonicalSign(z)) points.emplace_back(z.begin(), z.end());
        return true;
      },
      max_nodes);
  // A point strictly below z in the conformal order has smaller l1 norm, so
  // scanning by norm only needs to compare against accepted minimal points.
  std::stable_sort(points.begin(), points.end(),
                   [](const IntVector& x, const IntVector& y) {
                     return NormL1(x) < NormL1(y);
                   });
  std::vector<IntVector> minimal;
  for (const auto& z : points) {
    const IntVector neg_z = Negate(z);
    bool dominated = false;
    for (const auto& g : minimal) {
      if (ConformalLeq(g, z) || ConformalLeq(g, neg_z)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(z);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool GraverVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult& GraverVerification::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw Error("no verification check named " + name);
}

GraverVerification VerifyGraver(const IntMatrix& a, const GraverBasis& basis,
                                Int radius, uint64_t max_nodes) {
  if (basis.num_vars() != a.cols()) {
    throw DimensionError("Graver basis has " +
                         std::to_string(basis.num_vars()) +
                         " coordinates, matrix has " +
                         std::to_string(a.cols()) + " columns");
  }
  GraverVerification report;
  const std::vector<IntVector> full = basis.FullSet();

  CheckResult kernel("kernel");
  for (const auto& g : basis.elements()) {
    if (IsZero(g) || !IsZero(a.Multiply(g))) {
      kernel.passed = false;
      kernel.detail = "element " + ToString(g) + " is not a nonzero kernel vector";
      kernel.counterexample = {g};
      break;
    }
  }
  report.checks.push_back(std::move(kernel));

  CheckResult minimality("minimality");
  for (size_t i = 0; i < full.size() && minimality.passed; ++i) {
    for (size_t j = 0; j < full.size(); ++j) {
      if (i != j && ConformalLeq(full[i], full[j])) {
        minimality.passed = false;
        minimality.detail =
            ToString(full[i]) + " is conformally below " + ToString(full[j]);
        minimality.counterexample = {full[i], full[j]};
        break;
      }
    }
  }
  report.checks.push_back(std::move(minimality));

  // No nonzero kernel vector may sit strictly below an element.
  CheckResult irreducible("irreducibility");
  for (const auto& g : basis.elements()) {
    IntVector lo(g.size()), hi(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
      lo[i] = std::min(Int(0), g[i]);
      hi[i] = std::max(Int(0), g[i]);
    }
    StandardFormSet below(a, IntVector(a.rows()), lo, hi);
    ForEachFeasiblePoint(
        below,
        [&](std::span<const Int> h) {
          if (IsZero(h) || std::equal(h.begin(), h.end(), g.begin())) {
            return true;
          }
          irreducible.passed = false;
          irreducible.detail = "kernel vector " + ToString(h) +
                               " is strictly below element " + ToString(g);
          irreducible.counterexample = {IntVector(h.begin(), h.end()), g};
          return false;
        },
        max_nodes);
    if (!irreducible.passed) break;
  }
  report.checks.push_back(std::move(irreducible));

  CheckResult completeness("completeness");
  std::vector<SignMask> masks;
  masks.reserve(full.size());
  for (const auto& g : full) masks.emplace_back(g);
  ForEachFeasiblePoint(
      KernelBox(a, radius),
      [&](std::span<const Int> z) {
        if (!HasCanonicalSign(z)) return true;
        IntVector rest(z.begin(), z.end());
        while (!IsZero(rest)) {
          const SignMask mask(rest);
          size_t found = full.size();
          for (size_t t = 0; t < full.size(); ++t) {
            if (masks[t].SubsetOf(mask) && MagnitudeLeq(full[t], rest)) {
              found = t;
              break;
            }
          }
          if (found == full.size()) {
            completeness.passed = false;
            completeness.detail = "kernel point " + ToString(z) +
                                  " has no conformal decomposition (stuck at " +
                                  ToString(rest) + ")";
            completeness.counterexample = {IntVector(z.begin(), z.end())};
            return false;
          }
          rest = Subtract(rest, full[found]);
        }
        return true;
      },
      max_nodes);
  report.checks.push_back(std::move(completeness));
  return report;
}

IntMatrix NFoldProduct(const IntMatrix& a1, const IntMatrix& a2, size_t n) {
  if (a1.cols() != a2.cols()) {
    throw DimensionError("bimatrix blocks have " + std::to_string(a1.cols()) +
                         " and " + std::to_string(a2.cols()) + " columns");
  }
  if (n == 0) throw ValidationError("n-fold product needs n >= 1");
  const size_t r = a1.rows();
  const size_t s = a2.rows();
  const size_t t = a1.cols();
  IntMatrix out(r + n * s, n * t);
  for (size_t block = 0; block < n; ++block) {
    for (size_t c = 0; c < t; ++c) {
      for (size_t i = 0; i < r; ++i) out(i, block * t + c) = a1(i, c);
      for (size_t i = 0; i < s; ++i) {
        out(r + block * s + i, block * t + c) = a2(i, c);
      }
    }
  }
  return out;
}

}  // namespace robust_ip
