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

#include "distrep/rational.h"

#include <stdexcept>

namespace distrep {

BigInt isqrt(const BigInt& m) {
  if (sgn(m) < 0) throw std::domain_error("isqrt of a negative number");
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
  return s;
}

int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("integer " + v.get_str() +
                              " does not fit in 64 bits");
  }
  return v.get_si();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text) ||
      den_text.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  return Rational(BigInt(std::string(num_text)), BigInt(std::string(den_text)));
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace distrep
