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

#include <map>
#include <string>

#include "vtl/matching.hpp"
#include "vtl/quad_scalar.hpp"

namespace vtl {

/// Finite linear combination of n-strand Brauer diagrams.
/// Zero coefficients are never stored, so == is exact equality.
class AlgebraElement {
 public:
  using Terms = std::map<Matching, QuadScalar>;

  /// The zero element on n strands.
  explicit AlgebraElement(int n);
  AlgebraElement(const Matching& m, QuadScalar coefficient = 1);

  static AlgebraElement unit(int n) { return AlgebraElement(identity_diagram(n)); }

  int strands() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QuadScalar coefficient(const Matching& m) const;

  std::string to_string() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  friend AlgebraElement element_add(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement element_scale(const QuadScalar&, const AlgebraElement&);
  friend AlgebraElement element_multiply(const AlgebraElement&, const AlgebraElement&,
                                         const QuadScalar&);

  void accumulate(const Matching& m, const QuadScalar& c);

  int n_;
  Terms terms_;
};

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_scale(const QuadScalar& s, const AlgebraElement& x);
/// Bilinear extension of compose with weight `loop_value` per closed loop.
AlgebraElement element_multiply(const AlgebraElement& x, const AlgebraElement& y,
                                const QuadScalar& loop_value);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  return element_add(x, y);
}
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  return element_add(x, element_scale(-1, y));
}
inline AlgebraElement operator*(const QuadScalar& s, const AlgebraElement& x) {
  return element_scale(s, x);
}

/// Markov-style closure: Σ coeff · λ^(loops after joining T_k to B_k).
QuadScalar closure_trace(const AlgebraElement& x, const QuadScalar& loop_value);

}  // namespace vtl
