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

#ifndef ROBUST_IP_ERRORS_H_
#define ROBUST_IP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace robust_ip {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or matrix shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input data violates a type invariant (bounds, box order, balance, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A resource cap (element count, pair budget, enumeration size, iteration
// count) was hit before the computation could be completed. Results are
// never truncated silently; this is raised instead.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// The feasible set was proven empty.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace robust_ip

#endif  // ROBUST_IP_ERRORS_H_
