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

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vtl {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or "+p/q" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Thrown when two irrational scalars from different quadratic fields meet.
class DiscriminantMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element x + y·√D of the quadratic field ℚ(√D).
///
/// Values are kept canonical so that == is structural:
///  - D is reduced to a squarefree integer (√(p/q) = √(p·q)/q, square
///    factors move into y);
///  - if D is a perfect square the value collapses to a rational;
///  - a rational value (y == 0) always carries D == 0.
/// A rational is compatible with every field. Combining two irrational
/// values with different D throws DiscriminantMismatch.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long value) : x_(value) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational value) : x_(std::move(value)) { x_.canonicalize(); }  // NOLINT
  QuadScalar(Rational x, Rational y, Rational d);

  /// √d as a field element.
  static QuadScalar sqrt_of(const Rational& d);

  const Rational& rational_part() const { return x_; }
  const Rational& irrational_part() const { return y_; }
  /// Squarefree radicand; 0 for rational values.
  const Rational& discriminant() const { return d_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  /// Multiplicative inverse; throws std::domain_error for zero.
  QuadScalar inverse() const;
  QuadScalar pow(unsigned exponent) const;
  /// Field norm x² − D·y².
  Rational norm() const;

  /// Real value when D ≥ 0, otherwise the real part; for display only.
  double approx_real() const;
  double approx_imag() const;

  std::string to_string() const;

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_;
  }

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

 private:
  void normalize();
  // Field shared by *this and other; throws on mismatch.
  Rational common_discriminant(const QuadScalar& other) const;

  Rational x_{0};
  Rational y_{0};
  Rational d_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& s);

}  // namespace vtl
