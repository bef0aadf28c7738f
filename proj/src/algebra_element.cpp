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

#include "vtl/algebra_element.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace vtl {

namespace {

void require_same_strands(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.strands() != y.strands()) {
    throw std::invalid_argument("algebra elements on " + std::to_string(x.strands()) + " and " +
                                std::to_string(y.strands()) + " strands");
  }
}

void join_field(Rational& d, const QuadScalar& s) {
  if (s.is_rational()) return;
  if (sgn(d) != 0 && d != s.discriminant()) {
    throw DiscriminantMismatch("coefficients from Q(sqrt(" + d.get_str() + ")) and Q(sqrt(" +
                               s.discriminant().get_str() + ")) in one expression");
  }
  d = s.discriminant();
}

void join_field(Rational& d, const AlgebraElement& x) {
  for (const auto& [m, c] : x.terms()) join_field(d, c);
}

}  // namespace

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("algebra element needs n >= 1");
}

AlgebraElement::AlgebraElement(const Matching& m, QuadScalar coefficient) : n_(m.strands()) {
  accumulate(m, coefficient);
}

QuadScalar AlgebraElement::coefficient(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuadScalar() : it->second;
}

void AlgebraElement::accumulate(const Matching& m, const QuadScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*" << m.to_string();
  }
  return os.str();
}

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_strands(x, y);
  Rational d = 0;
  join_field(d, x);
  join_field(d, y);
  AlgebraElement r = x;
  for (const auto& [m, c] : y.terms_) r.accumulate(m, c);
  return r;
}

AlgebraElement element_scale(const QuadScalar& s, const AlgebraElement& x) {
  AlgebraElement r(x.n_);
  if (s.is_zero()) return r;
  Rational d = 0;
  join_field(d, s);
  join_field(d, x);
  for (const auto& [m, c] : x.terms_) r.accumulate(m, s * c);
  return r;
}

AlgebraElement element_multiply(const AlgebraElement& x, const AlgebraElement& y,
                                const QuadScalar& loop_value) {
  require_same_strands(x, y);
  Rational d = 0;
  join_field(d, loop_value);
  join_field(d, x);
  join_field(d, y);
  AlgebraElement r(x.n_);
  std::vector<QuadScalar> powers{QuadScalar(1)};
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      Composite prod = compose(mx, my);
      while (static_cast<int>(powers.size()) <= prod.loops) powers.push_back(powers.back() * loop_value);
      r.accumulate(prod.diagram, cx * cy * powers[prod.loops]);
    }
  }
  return r;
}

QuadScalar closure_trace(const AlgebraElement& x, const QuadScalar& loop_value) {
  QuadScalar total;
  for (const auto& [m, c] : x.terms()) total += c * loop_value.pow(static_cast<unsigned>(closure_loops(m)));
  return total;
}

}  // namespace vtl
