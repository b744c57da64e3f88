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

#ifndef ROBUST_IP_ENUMERATE_H_
#define ROBUST_IP_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <span>

#include "robust_ip/core.h"

namespace robust_ip {

// Return false to stop the enumeration early.
using PointVisitor = std::function<bool(std::span<const Int>)>;

struct EnumerationStats {
  uint64_t nodes = 0;
  uint64_t points = 0;
  bool stopped_early = false;
};

// Depth-first search over the integer points of `set`. Coordinates are
// assigned in ascending index order, values in ascending order, so points are
// visited in lexicographic order. Every node tightens the remaining variable
// domains by interval propagation over the equations, and a subtree is pruned
// as soon as some row's residual is out of reach of the remaining domains.
// Throws ResourceLimitError when more than `max_nodes` nodes are expanded.
EnumerationStats ForEachFeasiblePoint(const StandardFormSet& set,
                                      const PointVisitor& visit,
                                      uint64_t max_nodes);

}  // namespace robust_ip

#endif  // ROBUST_IP_ENUMERATE_H_
