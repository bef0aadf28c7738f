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


#include "vtl/diagram_rep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vtl {

DiagramRep::DiagramRep(int n, QuadScalar lambda) : n_(n), lambda_(std::move(lambda)) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
}

AlgebraElement DiagramRep::generator(GeneratorSymbol s, const RhoParams& params) const {
  switch (s.kind) {
    case GeneratorKind::E:
      return AlgebraElement(e_diagram(s.index, n_));
    case GeneratorKind::V:
      return AlgebraElement(v_diagram(s.index, n_));
    case GeneratorKind::Rho:
      return rho_element(s.index, n_, params);
    case GeneratorKind::RhoInv:
      if (auto inv = rho_inverse_element(s.index, n_, params)) return *std::move(inv);
      throw NotInvertible("rho_" + std::to_string(s.index) + " is not invertible for these parameters");
  }
  throw std::logic_error("unhandled generator kind");
}

double DiagramRep::max_magnitude(const Element& x) const {
  double best = 0;
  for (const auto& [m, c] : x.terms()) best = std::max(best, std::hypot(c.approx_real(), c.approx_imag()));
  return best;
}

std::vector<std::vector<QuadScalar>> DiagramRep::coordinates(const std::vector<Element>& xs) const {
  std::set<Matching> support;
  for (const auto& x : xs) {
    for (const auto& [m, c] : x.terms()) support.insert(m);
  }
  std::vector<std::vector<QuadScalar>> out;
  for (const auto& x : xs) {
    std::vector<QuadScalar> row;
    row.reserve(support.size());
    for (const auto& m : support) row.push_back(x.coefficient(m));
    out.push_back(std::move(row));
  }
  return out;
}

Json DiagramRep::witness(const Element& x) const {
  if (x.is_zero()) return nullptr;
  const auto& [m, c] = *x.terms().begin();
  Json out = Json::object();
  out["matching"] = vtl::to_json(m);
  out["coefficient"] = vtl::to_json(c);
  out["text"] = c.to_string() + " * " + m.to_string();
  return out;
}

}  // namespace vtl
