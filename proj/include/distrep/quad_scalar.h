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

#ifndef DISTREP_QUAD_SCALAR_H_
#define DISTREP_QUAD_SCALAR_H_

#include <ostream>
#include <string>

#include "distrep/rational.h"

namespace distrep {

// An element a + b*sqrt(r) of the real quadratic field Q(sqrt(r)), r > 0.
//
// The radicand defaults to 2. Values with b == 0 are plain rationals and
// combine with any radicand; two values with b != 0 must share r (mixing
// fields throws std::invalid_argument). On construction the radicand is
// made an integer and freed of square factors below 100, so the same field
// usually gets the same r; a square radicand is folded into `a`. Hence
// b != 0 always means r is not a square and {1, sqrt(r)} is a basis.
class QuadScalar {
 public:
  QuadScalar() : r_(2) {}
  QuadScalar(const Rational& a) : a_(a), r_(2) {}  // NOLINT: implicit
  QuadScalar(int64_t a) : a_(a), r_(2) {}          // NOLINT: implicit
  QuadScalar(Rational a, Rational b, Rational radicand = Rational(2));

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return r_; }
  bool is_rational() const { return b_.is_zero(); }

  // a - b*sqrt(r).
  QuadScalar conjugate() const;
  // a^2 - r*b^2.
  Rational norm() const { return a_ * a_ - r_ * b_ * b_; }

  double to_double() const;
  std::string to_string() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) {
    return x += y;
  }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) {
    return x -= y;
  }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) {
    return x *= y;
  }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) {
    return x /= y;
  }

 private:
  // Radicand of the field containing both operands.
  const Rational& common_radicand(const QuadScalar& o) const;

  Rational a_;
  Rational b_;
  Rational r_;
};

// Exact sign of a + b*sqrt(r): sign analysis of a and b, then a^2 vs r*b^2.
int quad_sign(const QuadScalar& x);

inline int sign(const QuadScalar& x) { return quad_sign(x); }
inline int compare(const QuadScalar& x, const QuadScalar& y) {
  return quad_sign(x - y);
}
inline QuadScalar abs(const QuadScalar& x) {
  return quad_sign(x) < 0 ? -x : x;
}
// Largest integer k with k <= x.
BigInt floor(const QuadScalar& x);

inline bool operator==(const QuadScalar& x, const QuadScalar& y) {
  return compare(x, y) == 0;
}
inline bool operator<(const QuadScalar& x, const QuadScalar& y) {
  return compare(x, y) < 0;
}
inline bool operator>(const QuadScalar& x, const QuadScalar& y) {
  return compare(x, y) > 0;
}
inline bool operator<=(const QuadScalar& x, const QuadScalar& y) {
  return compare(x, y) <= 0;
}
inline bool operator>=(const QuadScalar& x, const QuadScalar& y) {
  return compare(x, y) >= 0;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

}  // namespace distrep

#endif  // DISTREP_QUAD_SCALAR_H_
