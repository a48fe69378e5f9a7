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

#include "distrep/quad_scalar.h"

#include <stdexcept>
#include <utility>

namespace distrep {

namespace {

constexpr unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                          29, 31, 37, 41, 43, 47, 53, 59, 61,
                                          67, 71, 73, 79, 83, 89, 97};

bool is_square(const BigInt& v) {
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

}  // namespace

QuadScalar::QuadScalar(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
  if (r_.sign() <= 0) throw std::invalid_argument("radicand must be positive");
  if (b_.is_zero()) return;
  // sqrt(p/q) = sqrt(p*q) / q, then pull small square factors out.
  BigInt m = r_.num() * r_.den();
  b_ = b_ / Rational(r_.den());
  for (unsigned long p : kSmallPrimes) {
    const unsigned long sq = p * p;
    while (mpz_divisible_ui_p(m.get_mpz_t(), sq)) {
      m /= sq;
      b_ = b_ * Rational(static_cast<int64_t>(p));
    }
  }
  if (is_square(m)) {
    a_ += b_ * Rational(isqrt(m));
    b_ = Rational();
    r_ = Rational(2);
    return;
  }
  r_ = Rational(m);
}

const Rational& QuadScalar::common_radicand(const QuadScalar& o) const {
  if (o.b_.is_zero()) return r_;
  if (b_.is_zero()) return o.r_;
  if (r_ != o.r_) {
    throw std::invalid_argument("QuadScalar radicands differ: " +
                                r_.to_string() + " vs " + o.r_.to_string());
  }
  return r_;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar c = *this;
  c.b_ = -c.b_;
  return c;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar c = *this;
  c.a_ = -c.a_;
  c.b_ = -c.b_;
  return c;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  r_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  r_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  r_ = common_radicand(o);
  // (a + b s)(c + d s) = (ac + bd r) + (ad + bc) s
  Rational a = a_ * o.a_ + b_ * o.b_ * r_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  r_ = common_radicand(o);
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("QuadScalar division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

int quad_sign(const QuadScalar& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const int c = compare(x.a() * x.a(), x.b() * x.b() * x.radicand());
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

BigInt floor(const QuadScalar& x) {
  if (x.is_rational()) return x.a().floor();
  // s = floor(|b| sqrt r) = isqrt(floor(b^2 r)).
  const BigInt s = isqrt((x.b() * x.b() * x.radicand()).floor());
  BigInt k = x.b().sign() > 0 ? (x.a() + Rational(s)).floor()
                              : (x.a() - Rational(s) - Rational(1)).floor();
  // x lies in [k, k + 2), so at most two corrections are needed.
  while (compare(QuadScalar(Rational(BigInt(k + 1))), x) <= 0) ++k;
  return k;
}

double QuadScalar::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  // Evaluate with 256 bits so that cancellation in a + b sqrt(r) does not
  // cost displayed digits.
  mpf_class r(r_.raw(), 256), a(a_.raw(), 256), b(b_.raw(), 256);
  mpf_class v(0, 256);
  v = a + b * sqrt(r);
  return v.get_d();
}

std::string QuadScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") +
         abs(b_).to_string() + "*sqrt(" + r_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) {
  return os << x.to_string();
}

}  // namespace distrep
