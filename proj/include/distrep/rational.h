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

#ifndef DISTREP_RATIONAL_H_
#define DISTREP_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace distrep {

using BigInt = mpz_class;

// Largest s with s*s <= m. Throws std::domain_error for negative m.
BigInt isqrt(const BigInt& m);

// Converts to int64, throwing std::overflow_error when out of range.
int64_t to_int64(const BigInt& v);

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit
  Rational(const BigInt& v) : q_(v) {}                // NOLINT: implicit
  // Integer-valued gmp expressions such as `a + 1` or `-b`.
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& v)  // NOLINT: implicit
      : q_(BigInt(v)) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p", "p/q" or "-p/q" (whitespace not allowed). Throws
  // std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return q_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

inline int sign(const Rational& x) { return x.sign(); }
inline int compare(const Rational& a, const Rational& b) {
  const int c = cmp(a.raw(), b.raw());
  return (c > 0) - (c < 0);
}
inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline BigInt floor(const Rational& x) { return x.floor(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace distrep

#endif  // DISTREP_RATIONAL_H_
