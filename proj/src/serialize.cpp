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


#include "vtl/serialize.hpp"

namespace vtl {

namespace {

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

Json discriminant(const Rational& d) {
  Json out = Json::object();
  out["D_num"] = integer(d.get_num());
  out["D_den"] = integer(d.get_den());
  return out;
}

Rational matrix_discriminant(const DenseMatrix& m) {
  for (const auto& e : m.entries()) {
    if (!e.is_rational()) return e.discriminant();
  }
  return 0;
}

}  // namespace

Json to_json(const QuadScalar& s) {
  Json out = Json::object();
  out["x_num"] = integer(s.rational_part().get_num());
  out["x_den"] = integer(s.rational_part().get_den());
  out["y_num"] = integer(s.irrational_part().get_num());
  out["y_den"] = integer(s.irrational_part().get_den());
  out["D_num"] = integer(s.discriminant().get_num());
  out["D_den"] = integer(s.discriminant().get_den());
  return out;
}

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const auto& [p, q] : m.pairs()) out.push_back(Json::array({p.label(), q.label()}));
  return out;
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json term = Json::object();
    term["matching"] = to_json(m);
    term["coefficient"] = to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const DenseMatrix& m) {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["D"] = discriminant(matrix_discriminant(m));
  Json entries = Json::array();
  for (const auto& e : m.entries()) {
    entries.push_back(Json::array({integer(e.rational_part().get_num()), integer(e.rational_part().get_den()),
                                   integer(e.irrational_part().get_num()),
                                   integer(e.irrational_part().get_den())}));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const RhoParams& p) {
  Json out = Json::object();
  out["a"] = to_json(p.a);
  out["b"] = to_json(p.b);
  out["c"] = to_json(p.c);
  out["lambda"] = to_json(p.lambda);
  out["D"] = discriminant(p.discriminant());
  return out;
}

}  // namespace vtl
