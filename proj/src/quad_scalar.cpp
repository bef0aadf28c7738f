// Copyright 2026 The vtl Authors
//
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

#include "vtl/quad_scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace vtl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Writes |m| = s²·f with f squarefree (as far as trial division reaches),
// replaces m by sign(m)·f and returns s.
mpz_class extract_square(mpz_class& m) {
  const int sign = sgn(m);
  if (sign == 0) return 1;
  constexpr unsigned long kTrialLimit = 1UL << 20;
  mpz_class rest = abs(m);
  mpz_class s = 1;
  mpz_class f = 1;
  unsigned long steps = 0;
  for (mpz_class p = 2; p * p <= rest && steps < kTrialLimit; p += (p == 2) ? 1 : 2, ++steps) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) s *= p;
    if (e % 2 == 1) f *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      s *= sqrt(rest);
    } else {
      f *= rest;
    }
  }
  m = f * sign;
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QuadScalar::QuadScalar(Rational x, Rational y, Rational d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
  x_.canonicalize();
  y_.canonicalize();
  d_.canonicalize();
  normalize();
}

QuadScalar QuadScalar::sqrt_of(const Rational& d) { return QuadScalar(0, 1, d); }

void QuadScalar::normalize() {
  if (sgn(y_) == 0 || sgn(d_) == 0) {
    y_ = 0;
    d_ = 0;
    return;
  }
  // √(p/q) = √(p·q) / q
  mpz_class m = d_.get_num() * d_.get_den();
  y_ /= Rational(d_.get_den());
  mpz_class s = extract_square(m);
  y_ *= Rational(s);
  if (m == 1) {
    x_ += y_;
    y_ = 0;
    d_ = 0;
    return;
  }
  d_ = Rational(m);
}

Rational QuadScalar::common_discriminant(const QuadScalar& other) const {
  if (sgn(y_) == 0) return other.d_;
  if (sgn(other.y_) == 0) return d_;
  if (d_ != other.d_) {
    throw DiscriminantMismatch("QuadScalar: mixing sqrt(" + d_.get_str() + ") and sqrt(" +
                               other.d_.get_str() + ")");
  }
  return d_;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.x_ = -r.x_;
  r.y_ = -r.y_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  Rational d = common_discriminant(rhs);
  x_ += rhs.x_;
  y_ += rhs.y_;
  d_ = d;
  if (sgn(y_) == 0) d_ = 0;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) { return *this += -rhs; }

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  Rational d = common_discriminant(rhs);
  Rational x = x_ * rhs.x_ + d * y_ * rhs.y_;
  Rational y = x_ * rhs.y_ + y_ * rhs.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  d_ = sgn(y_) == 0 ? Rational(0) : d;
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) { return *this *= rhs.inverse(); }

Rational QuadScalar::norm() const { return x_ * x_ - d_ * y_ * y_; }

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QuadScalar: inverse of zero");
  Rational n = norm();
  QuadScalar r;
  r.x_ = x_ / n;
  r.y_ = -y_ / n;
  r.d_ = d_;
  return r;
}

QuadScalar QuadScalar::pow(unsigned exponent) const {
  QuadScalar result(1);
  QuadScalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

double QuadScalar::approx_real() const {
  if (sgn(d_) >= 0) return x_.get_d() + y_.get_d() * std::sqrt(d_.get_d());
  return x_.get_d();
}

double QuadScalar::approx_imag() const {
  if (sgn(d_) >= 0) return 0.0;
  return y_.get_d() * std::sqrt(-d_.get_d());
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return x_.get_str();
  std::ostringstream os;
  if (sgn(x_) != 0) os << x_.get_str() << (sgn(y_) > 0 ? " + " : " - ");
  else if (sgn(y_) < 0) os << "-";
  Rational ay = abs(y_);
  if (ay != 1) os << ay.get_str() << "*";
  os << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& s) { return os << s.to_string(); }

}  // namespace vtl
