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

#ifndef ROBUST_IP_INTEGER_H_
#define ROBUST_IP_INTEGER_H_

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>

#include "robust_ip/errors.h"

namespace robust_ip {

// A 64-bit signed integer whose arithmetic never wraps. Every operation that
// would leave the int64 range throws OverflowError instead.
class Int {
 public:
  constexpr Int() = default;
  template <std::integral T>
  constexpr Int(T v) : v_(Narrow(v)) {}  // NOLINT(runtime/explicit)

  constexpr int64_t value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) Overflow("+", a, b);
    return FromRaw(r);
  }
  friend Int operator-(Int a, Int b) {
    int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) Overflow("-", a, b);
    return FromRaw(r);
  }
  friend Int operator*(Int a, Int b) {
    int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) Overflow("*", a, b);
    return FromRaw(r);
  }
  Int operator-() const {
    if (v_ == std::numeric_limits<int64_t>::min()) Overflow("neg", *this, 0);
    return FromRaw(-v_);
  }
  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int a, Int b) = default;
  friend constexpr auto operator<=>(Int a, Int b) = default;

  std::string ToString() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, Int a) {
    return os << a.v_;
  }

 private:
  template <std::integral T>
  static constexpr int64_t Narrow(T v) {
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(int64_t)) {
      if (v > static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
        throw OverflowError("integer literal out of int64 range");
      }
    }
    return static_cast<int64_t>(v);
  }
  static constexpr Int FromRaw(int64_t v) {
    Int r;
    r.v_ = v;
    return r;
  }
  [[noreturn]] static void Overflow(const char* op, Int a, Int b) {
    throw OverflowError("integer overflow in " + a.ToString() + " " + op +
                        " " + b.ToString());
  }

  int64_t v_ = 0;
};

inline Int Abs(Int a) { return a < 0 ? -a : a; }
inline int Sign(Int a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Rounds the quotient a/b toward negative infinity. b must be nonzero.
inline Int FloorDiv(Int a, Int b) {
  if (b == 0) throw Error("division by zero");
  if (a.value() == std::numeric_limits<int64_t>::min() && b == -1) {
    throw OverflowError("integer overflow in floor division");
  }
  int64_t q = a.value() / b.value();
  if ((a.value() % b.value() != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int CeilDiv(Int a, Int b) { return -FloorDiv(-a, b); }

}  // namespace robust_ip

template <>
struct std::hash<robust_ip::Int> {
  size_t operator()(robust_ip::Int a) const noexcept {
    return std::hash<int64_t>()(a.value());
  }
};

#endif  // ROBUST_IP_INTEGER_H_
