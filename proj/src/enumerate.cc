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

#include "robust_ip/enumerate.h"

#include <algorithm>
#include <string>
#include <vector>

namespace robust_ip {
namespace {

constexpr int kMaxPropagationPasses = 64;

class Enumerator {
 public:
  Enumerator(const StandardFormSet& set, const PointVisitor& visit,
             uint64_t max_nodes)
      : set_(set), visit_(visit), max_nodes_(max_nodes) {}

  EnumerationStats Run() {
    Search(set_.lower(), set_.upper());
    return stats_;
  }

 private:
  // Tightens [lo, hi] in place. Returns false when some domain becomes empty
  // or some row cannot be satisfied.
  bool Propagate(IntVector& lo, IntVector& hi) const {
    const IntMatrix& a = set_.a();
    for (int pass = 0; pass < kMaxPropagationPasses; ++pass) {
      bool changed = false;
      for (size_t r = 0; r < a.rows(); ++r) {
        Int min_act = 0;
        Int max_act = 0;
        for (size_t j = 0; j < a.cols(); ++j) {
          const Int c = a(r, j);
          if (c > 0) {
            min_act += c * lo[j];
            max_act += c * hi[j];
          } else if (c < 0) {
            min_act += c * hi[j];
            max_act += c * lo[j];
          }
        }
        const Int rhs = set_.b()[r];
        if (rhs < min_act || rhs > max_act) return false;
        if (min_act == max_act) continue;
        for (size_t j = 0; j < a.cols(); ++j) {
          const Int c = a(r, j);
          if (c == 0 || lo[j] == hi[j]) continue;
          const Int own_min = c > 0 ? c * lo[j] : c * hi[j];
          const Int own_max = c > 0 ? c * hi[j] : c * lo[j];
          // c * x_j lies in [rhs - others_max, rhs - others_min].
          const Int low = rhs - (max_act - own_max);
          const Int high = rhs - (min_act - own_min);
          Int new_lo, new_hi;
          if (c > 0) {
            new_lo = CeilDiv(low, c);
            new_hi = FloorDiv(high, c);
          } else {
            new_lo = CeilDiv(high, c);
            new_hi = FloorDiv(low, c);
          }
          if (new_lo > lo[j]) {
            lo[j] = new_lo;
            changed = true;
          }
          if (new_hi < hi[j]) {
            hi[j] = new_hi;
            changed = true;
          }
          if (lo[j] > hi[j]) return false;
        }
      }
      if (!changed) return true;
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool Search(IntVector lo, IntVector hi) {
    if (++stats_.nodes > max_nodes_) {
      throw ResourceLimitError("enumeration exceeded " +
                               std::to_string(max_nodes_) + " search nodes");
    }
    if (!Propagate(lo, hi)) return true;
    size_t branch = lo.size();
    for (size_t j = 0; j < lo.size(); ++j) {
      if (lo[j] != hi[j]) {
        branch = j;
        break;
      }
    }
    if (branch == lo.size()) {
      // Propagation may stop at the pass limit, so recheck the rows.
      if (set_.a().Multiply(lo) != set_.b()) return true;
      ++stats_.points;
      if (!visit_(lo)) {
        stats_.stopped_early = true;
        return false;
      }
      return true;
    }
    const Int last = hi[branch];
    for (Int v = lo[branch]; v <= last; v += 1) {
      IntVector child_lo = lo;
      IntVector child_hi = hi;
      child_lo[branch] = v;
      child_hi[branch] = v;
      if (!Search(std::move(child_lo), std::move(child_hi))) return false;
    }
    return true;
  }

  const StandardFormSet& set_;
  const PointVisitor& visit_;
  const uint64_t max_nodes_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats ForEachFeasiblePoint(const StandardFormSet& set,
                                      const PointVisitor& visit,
                                      uint64_t max_nodes) {
  return Enumerator(set, visit, max_nodes).Run();
}

}  // namespace robust_ip
