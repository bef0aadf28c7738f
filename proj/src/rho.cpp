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

#include "vtl/rho.hpp"

#include <stdexcept>

namespace vtl {

Rational RhoParams::discriminant() const {
  Rational d = 0;
  for (const QuadScalar* s : {&a, &b, &c, &lambda}) {
    if (!s->is_rational()) {
      if (sgn(d) != 0 && d != s->discriminant()) {
        throw DiscriminantMismatch("RhoParams: members live in different quadratic fields");
      }
      d = s->discriminant();
    }
  }
  return d;
}

BraidRoots solve_ab(const QuadScalar& lambda) {
  if (!lambda.is_rational()) throw std::invalid_argument("solve_ab: λ must be rational");
  const Rational& l = lambda.rational_part();
  QuadScalar root = QuadScalar::sqrt_of(l * l - 4);
  QuadScalar half(Rational(1, 2));
  return {-(half * (lambda - root)), -(half * (lambda + root))};
}

AlgebraElement rho_element(int i, int n, const RhoParams& params) {
  AlgebraElement r = element_scale(params.a, AlgebraElement::unit(n));
  r = r + element_scale(params.b, AlgebraElement(e_diagram(i, n)));
  return r + element_scale(params.c, AlgebraElement(v_diagram(i, n)));
}

std::optional<AlgebraElement> rho_inverse_element(int i, int n, const RhoParams& params) {
  const QuadScalar& a = params.a;
  const QuadScalar& b = params.b;
  const QuadScalar& c = params.c;
  QuadScalar det = a * a - c * c;
  QuadScalar e_scale = a + b * params.lambda + c;
  if (det.is_zero() || e_scale.is_zero()) return std::nullopt;
  QuadScalar alpha = a / det;
  QuadScalar gamma = -c / det;
  QuadScalar beta = -b / ((a + c) * e_scale);
  RhoParams inv{alpha, beta, gamma, params.lambda};
  AlgebraElement r = rho_element(i, n, inv);
  if (!(element_multiply(r, rho_element(i, n, params), params.lambda) == AlgebraElement::unit(n))) {
    throw std::logic_error("rho_inverse_element: closed form failed verification");
  }
  return r;
}

}  // namespace vtl
