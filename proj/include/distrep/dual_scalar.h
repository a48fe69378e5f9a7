// Copyright 2026 The distrep Authors
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

#ifndef DISTREP_DUAL_SCALAR_H_
#define DISTREP_DUAL_SCALAR_H_

#include <cstdint>
#include <ostream>
#include <utility>

#include "distrep/quad_scalar.h"
#include "distrep/rational.h"

namespace distrep {

// value + eps * e for a positive infinitesimal e, truncated at first order.
// Ordered lexicographically: values first, then eps parts.
template <class T>
struct Dual {
  T value;
  T eps;

  Dual() = default;
  Dual(T v) : value(std::move(v)), eps() {}  // NOLINT: implicit
  Dual(T v, T e) : value(std::move(v)), eps(std::move(e)) {}

  Dual operator-() const { return Dual(-value, -eps); }
  Dual& operator+=(const Dual& o) {
    value += o.value;
    eps += o.eps;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    eps -= o.eps;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    eps = value * o.eps + eps * o.value;
    value *= o.value;
    return *this;
  }

  // (a + a'e) / (b + b'e) = a/b + (a'b - a b')/b^2 e; requires b != 0.
  Dual& operator/=(const Dual& o) {
    eps = (eps * o.value - value * o.eps) / (o.value * o.value);
    value /= o.value;
    return *this;
  }

  friend Dual operator+(Dual x, const Dual& y) { return x += y; }
  friend Dual operator/(Dual x, const Dual& y) { return x /= y; }
  friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
  friend Dual operator*(Dual x, const Dual& y) { return x *= y; }
};

template <class T>
int compare(const Dual<T>& x, const Dual<T>& y) {
  const int c = compare(x.value, y.value);
  return c != 0 ? c : compare(x.eps, y.eps);
}

template <class T>
int sign(const Dual<T>& x) {
  const int s = sign(x.value);
  return s != 0 ? s : sign(x.eps);
}

template <class T>
Dual<T> abs(const Dual<T>& x) {
  return sign(x) < 0 ? -x : x;
}

template <class T>
bool operator==(const Dual<T>& x, const Dual<T>& y) {
  return compare(x, y) == 0;
}
template <class T>
bool operator<(const Dual<T>& x, const Dual<T>& y) {
  return compare(x, y) < 0;
}
template <class T>
bool operator<=(const Dual<T>& x, const Dual<T>& y) {
  return compare(x, y) <= 0;
}
template <class T>
bool operator>(const Dual<T>& x, const Dual<T>& y) {
  return compare(x, y) > 0;
}
template <class T>
bool operator>=(const Dual<T>& x, const Dual<T>& y) {
  return compare(x, y) >= 0;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x) {
  return os << "(" << x.value << ") + (" << x.eps << ")e";
}

// Largest integer i with i*unit <= x in the dual order. Requires
// unit.value > 0 and x.value >= 0.
template <class T>
BigInt floor_index(const Dual<T>& x, const Dual<T>& unit) {
  BigInt k = floor(x.value / unit.value);
  const T kk = T(Rational(k));
  if (compare(Dual<T>(kk * unit.value, kk * unit.eps), x) > 0) k -= 1;
  return k;
}

// floor_index with a constant unit: equals floor(x.value / unit) unless the
// quotient is an integer, in which case the sign of x.eps decides.
template <class T>
BigInt dual_floor_index(const Dual<T>& x, const T& unit) {
  return floor_index(x, Dual<T>(unit));
}

}  // namespace distrep

#endif  // DISTREP_DUAL_SCALAR_H_
