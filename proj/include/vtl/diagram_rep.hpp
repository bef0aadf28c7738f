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

#include "vtl/algebra_element.hpp"
#include "vtl/representation.hpp"

namespace vtl {

/// The Brauer diagram algebra D_n(λ) acting on itself.
class DiagramRep {
 public:
  using Element = AlgebraElement;

  /// Throws std::invalid_argument for n < 1.
  DiagramRep(int n, QuadScalar lambda);

  int strands() const { return n_; }
  const QuadScalar& loop_value() const { return lambda_; }
  std::string name() const { return "diagram"; }
  bool is_concrete_model() const { return false; }

  Element identity() const { return AlgebraElement::unit(n_); }
  Element zero() const { return AlgebraElement(n_); }
  /// Throws std::out_of_range for a bad index, NotInvertible for a singular ρ.
  Element generator(GeneratorSymbol s, const RhoParams& params) const;
  Element multiply(const Element& x, const Element& y) const { return element_multiply(x, y, lambda_); }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element scale(const QuadScalar& s, const Element& x) const { return s * x; }
  bool is_zero(const Element& x) const { return x.is_zero(); }
  std::size_t term_count(const Element& x) const { return x.size(); }
  double max_magnitude(const Element& x) const;
  std::vector<std::vector<QuadScalar>> coordinates(const std::vector<Element>& xs) const;
  Json witness(const Element& x) const;
  Json to_json(const Element& x) const { return vtl::to_json(x); }

 private:
  int n_;
  QuadScalar lambda_;
};

}  // namespace vtl
