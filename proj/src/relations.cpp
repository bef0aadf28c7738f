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

#include "vtl/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace vtl {

namespace groups {

Expr e(int i) { return Expr::gen(E(i)); }
Expr v(int i) { return Expr::gen(V(i)); }
Expr rho(int i) { return Expr::gen(Rho(i)); }
Expr e_star(int i) { return Expr::one() - e(i); }

Expr f0(int i) { return e(i) * v(i + 1) * e(i) - e(i + 1) * v(i) * e(i + 1); }
Expr f1(int i) { return v(i) * e(i + 1) * e(i) - e(i + 1) * e(i) * v(i + 1); }
Expr f2(int i) { return e(i) * e(i + 1) * v(i) - v(i + 1) * e(i) * e(i + 1); }

Expr f0_brauer(int i) { return e(i) - e(i + 1); }
Expr f1_brauer(int i) { return v(i + 1) * e(i) - e(i + 1) * v(i); }
Expr f2_brauer(int i) { return e(i) * v(i + 1) - v(i) * e(i + 1); }
Expr v_diff(int i) { return v(i) - v(i + 1); }
Expr e_diff(int i) { return e(i) - e(i + 1); }

}  // namespace groups

namespace {

using namespace groups;

Expr sum(std::vector<Expr::Term> terms) { return Expr::sum(std::move(terms)); }
Expr prod(std::vector<Expr> factors) { return Expr::product(std::move(factors)); }
Expr named(std::string name, Expr body) { return Expr::named(std::move(name), std::move(body)); }

Expr named_f0(int i) { return named("[F]_0", f0(i)); }
Expr named_f1(int i) { return named("[F]_1", f1(i)); }
Expr named_f2(int i) { return named("[F]_2", f2(i)); }

struct Coefficients {
  QuadScalar vw;
  QuadScalar f0;
  QuadScalar f1;
  QuadScalar f2;
};

std::vector<BrauerTerm> brauer_terms(int i, const Coefficients& k) {
  return {{k.vw, "v_i-v_{i+1}", v_diff(i)},
          {k.f0, "[F]_0", f0_brauer(i)},
          {k.f1, "[F]_1", f1_brauer(i)},
          {k.f2, "[F]_2", f2_brauer(i)}};
}

class Builder {
 public:
  Builder(std::string family, int n, const RhoParams& params)
      : family_(std::move(family)), n_(n), p_(params) {}

  const RhoParams& params() const { return p_; }
  int n() const { return n_; }
  /// a²b + ab²λ + b³
  QuadScalar ab_polynomial() const {
    const auto& [a, b, c, l] = p_;
    return a * a * b + a * b * b * l + b * b * b;
  }

  RelationInstance& add(int site, Expr lhs, Expr rhs, InstanceKind kind = InstanceKind::Identity,
                        std::optional<int> partner = std::nullopt) {
    RelationInstance inst;
    inst.family = family_;
    inst.relation = lhs.to_string() + " = " + rhs.to_string();
    inst.n = n_;
    inst.site = site;
    inst.partner = partner;
    inst.lhs = std::move(lhs);
    inst.rhs = std::move(rhs);
    inst.kind = kind;
    out_.push_back(std::move(inst));
    return out_.back();
  }

  std::vector<RelationInstance> take() { return std::move(out_); }

 private:
  std::string family_;
  int n_;
  const RhoParams& p_;
  std::vector<RelationInstance> out_;
};

// Coefficients of the Brauer-reduced residuals. Each follows from
// substituting [F]_j by its reduced form and E_iv_i = v_iE_i = E_i.
Coefficients vtl_reduced(const RhoParams& p) {
  const auto& [a, b, c, l] = p;
  return {a * a * c, b * (a * a + a * b * l + b * b + c * (2 * a + b)), b * b * c, b * b * c};
}

Coefficients wtl1_reduced(const RhoParams& p) {
  const auto& [a, b, c, l] = p;
  return {0, b * (a * a + a * b * l + b * b + c * (a + b)), 0, b * c * (a + b)};
}

Coefficients wtl2_reduced(const RhoParams& p) {
  const auto& [a, b, c, l] = p;
  return {0, b * (a * a + a * b * l + b * b + c * (a + b)), b * c * (a + b), 0};
}

Coefficients ff1_reduced(const RhoParams& p) {
  const auto& [a, b, c, l] = p;
  return {a * a, a * b, b * b, -(a * b)};
}

Coefficients ff2_reduced(const RhoParams& p) {
  const auto& [a, b, c, l] = p;
  return {a * a, a * b, -(a * b), b * b};
}

// Both ⟨F1⟩ and ⟨F2⟩ reduce to (v_i − v_{i+1}) − [F]_0 + [F]_1 + [F]_2.
const Coefficients kStarForbidden{1, -1, 1, 1};

// Commutation partners j of site i with j ∉ {i − 1, i + 1}.
std::vector<int> non_adjacent(int i, int n, bool include_self) {
  std::vector<int> out;
  for (int j = 1; j <= n - 1; ++j) {
    if (std::abs(i - j) == 1) continue;
    if (j == i && !include_self) continue;
    out.push_back(j);
  }
  return out;
}

void build_bgr(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    if (i <= n - 2) {
      auto& inst = b.add(i, prod({rho(i), rho(i + 1), rho(i)}), prod({rho(i + 1), rho(i), rho(i + 1)}),
                         InstanceKind::Parametric);
      inst.rho_ansatz = true;
      inst.uses_rho = true;
      inst.brauer_form = brauer_terms(i, vtl_reduced(b.params()));
    }
    for (int j = i + 2; j <= n - 1; ++j) b.add(i, rho(i) * rho(j), rho(j) * rho(i), InstanceKind::Identity, j);
  }
}

void build_vcr(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    b.add(i, v(i) * v(i), Expr::one());
    if (i <= n - 2) b.add(i, prod({v(i), v(i + 1), v(i)}), prod({v(i + 1), v(i), v(i + 1)}));
    for (int j = i + 2; j <= n - 1; ++j) b.add(i, v(i) * v(j), v(j) * v(i), InstanceKind::Identity, j);
  }
}

void build_vbr(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    for (int j : non_adjacent(i, n, true)) {
      b.add(i, rho(i) * v(j), v(j) * rho(i), InstanceKind::Identity, j).uses_rho = true;
    }
    if (i <= n - 2) {
      b.add(i, prod({v(i), rho(i + 1), v(i)}), prod({v(i + 1), rho(i), v(i + 1)})).uses_rho = true;
    }
  }
}

void build_forbidden(Builder& b, bool first) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    Expr lhs = first ? prod({v(i), rho(i + 1), rho(i)}) : prod({rho(i), rho(i + 1), v(i)});
    Expr rhs = first ? prod({rho(i + 1), rho(i), v(i + 1)}) : prod({v(i + 1), rho(i), rho(i + 1)});
    auto& inst = b.add(i, lhs, rhs, InstanceKind::Quotient);
    inst.rho_ansatz = true;
    inst.uses_rho = true;
    inst.brauer_form = brauer_terms(i, first ? ff1_reduced(b.params()) : ff2_reduced(b.params()));
  }
}

void build_tlr(Builder& b) {
  const int n = b.n();
  const QuadScalar& lambda = b.params().lambda;
  for (int i = 1; i <= n - 1; ++i) {
    b.add(i, e(i) * e(i), lambda * e(i));
    if (i <= n - 2) {
      b.add(i, prod({e(i), e(i + 1), e(i)}), e(i));
      b.add(i, prod({e(i + 1), e(i), e(i + 1)}), e(i + 1));
    }
    for (int j = i + 2; j <= n - 1; ++j) b.add(i, e(i) * e(j), e(j) * e(i), InstanceKind::Identity, j);
  }
}

void build_vev(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    if (i <= n - 2) b.add(i, prod({v(i), e(i + 1), v(i)}), prod({v(i + 1), e(i), v(i + 1)}));
    for (int j : non_adjacent(i, n, true)) b.add(i, e(i) * v(j), v(j) * e(i), InstanceKind::Identity, j);
  }
}

Expr vtl_lhs(const Builder& b, int i) {
  const auto& [a, bb, c, l] = b.params();
  Expr mixed = named("(E_iv_i+v_iE_i-E_{i+1}v_{i+1}-v_{i+1}E_{i+1})",
                     sum({{1, e(i) * v(i)}, {1, v(i) * e(i)}, {-1, e(i + 1) * v(i + 1)}, {-1, v(i + 1) * e(i + 1)}}));
  return sum({{b.ab_polynomial(), named("(E_i-E_{i+1})", e_diff(i))},
              {a * a * c, named("(v_i-v_{i+1})", v_diff(i))},
              {a * bb * c, mixed},
              {bb * bb * c, named_f0(i) + named_f1(i) + named_f2(i)}});
}

std::vector<CoefficientSlot> vtl_slots(const Builder& b) {
  const auto& [a, bb, c, l] = b.params();
  return {{"a^2b+ab^2lambda+b^3", b.ab_polynomial()}, {"a^2c", a * a * c}, {"abc", a * bb * c}, {"b^2c", bb * bb * c}};
}

void build_vtl(Builder& b) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    auto& inst = b.add(i, vtl_lhs(b, i), Expr(), InstanceKind::Parametric);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, vtl_reduced(b.params()));
    inst.coefficients = vtl_slots(b);
  }
}

void build_ff(Builder& b, bool first) {
  const auto& [a, bb, c, l] = b.params();
  for (int i = 1; i <= b.n() - 2; ++i) {
    Expr mixed = first ? sum({{1, v(i) * e(i)}, {-1, e(i + 1) * v(i + 1)}, {1, v(i) * e(i + 1)}, {-1, e(i) * v(i + 1)}})
                       : sum({{1, e(i) * v(i)}, {-1, v(i + 1) * e(i + 1)}, {1, e(i + 1) * v(i)}, {-1, v(i + 1) * e(i)}});
    Expr lhs = (a * a) * named("(v_i-v_{i+1})", v_diff(i));
    Expr rhs = sum({{-(a * bb), named(first ? "(v_iE_i-E_{i+1}v_{i+1}+v_iE_{i+1}-E_iv_{i+1})"
                                            : "(E_iv_i-v_{i+1}E_{i+1}+E_{i+1}v_i-v_{i+1}E_i)",
                                      mixed)},
                    {-(bb * bb), first ? named_f1(i) : named_f2(i)}});
    auto& inst = b.add(i, lhs, rhs, InstanceKind::Quotient);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, first ? ff1_reduced(b.params()) : ff2_reduced(b.params()));
    inst.coefficients = {{"a^2", a * a}, {"ab", a * bb}, {"b^2", bb * bb}};
  }
}

void build_wtl(Builder& b, bool first) {
  const auto& [a, bb, c, l] = b.params();
  for (int i = 1; i <= b.n() - 2; ++i) {
    Expr mixed = first ? named("(E_iv_i-v_{i+1}E_{i+1}-v_iE_{i+1}+E_iv_{i+1})",
                               sum({{1, e(i) * v(i)}, {-1, v(i + 1) * e(i + 1)}, {-1, v(i) * e(i + 1)}, {1, e(i) * v(i + 1)}}))
                       : named("(v_iE_i-E_{i+1}v_{i+1}-E_{i+1}v_i+v_{i+1}E_i)",
                               sum({{1, v(i) * e(i)}, {-1, e(i + 1) * v(i + 1)}, {-1, e(i + 1) * v(i)}, {1, v(i + 1) * e(i)}}));
    Expr lhs = sum({{b.ab_polynomial(), named("(E_i-E_{i+1})", e_diff(i))},
                    {bb * bb * c, named_f0(i) + (first ? named_f2(i) : named_f1(i))},
                    {a * bb * c, mixed}});
    auto& inst = b.add(i, lhs, Expr(), InstanceKind::Parametric);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, first ? wtl1_reduced(b.params()) : wtl2_reduced(b.params()));
    inst.coefficients = {{"a^2b+ab^2lambda+b^3", b.ab_polynomial()}, {"b^2c", bb * bb * c}, {"abc", a * bb * c}};
  }
}

// c = 0 specialisation: (a²b + ab²λ + b³)(E_i − E_{i+1}) = 0.
void build_ab(Builder& b) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    QuadScalar k = b.ab_polynomial();
    auto& inst = b.add(i, k * named("(E_i-E_{i+1})", e_diff(i)), Expr(), InstanceKind::Parametric);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, {0, k, 0, 0});
    inst.coefficients = {{"a^2b+ab^2lambda+b^3", k}};
  }
}

// a = 0 specialisations. `mask` selects which [F]_j join [F]_0 in the main
// relation; `vanishing` lists the [F]_j required to vanish on their own.
void build_a0(Builder& b, bool with_f1, bool with_f2, std::vector<int> vanishing) {
  const auto& [a, bb, c, l] = b.params();
  for (int i = 1; i <= b.n() - 2; ++i) {
    for (int j : vanishing) {
      auto& inst = b.add(i, j == 1 ? named_f1(i) : named_f2(i), Expr(), InstanceKind::Parametric);
      inst.rho_ansatz = true;
      inst.brauer_form = brauer_terms(i, {0, 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0});
    }
    Expr fs = named_f0(i);
    if (with_f1) fs = fs + named_f1(i);
    if (with_f2) fs = fs + named_f2(i);
    auto& inst = b.add(i, sum({{bb, named("(E_i-E_{i+1})", e_diff(i))}, {c, fs}}), Expr(), InstanceKind::Parametric);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, {0, bb + c, with_f1 ? c : QuadScalar(0), with_f2 ? c : QuadScalar(0)});
    inst.coefficients = {{"b", bb}, {"c", c}};
  }
}

void build_brauer(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    b.add(i, e(i) * v(i), e(i));
    b.add(i, v(i) * e(i), e(i));
    for (int j : non_adjacent(i, n, false)) b.add(i, e(i) * v(j), v(j) * e(i), InstanceKind::Identity, j);
    if (i <= n - 2) {
      b.add(i, prod({v(i + 1), e(i), e(i + 1)}), v(i) * e(i + 1));
      b.add(i, prod({v(i), e(i + 1), e(i)}), v(i + 1) * e(i));
      b.add(i, prod({e(i + 1), e(i), v(i + 1)}), e(i + 1) * v(i));
      b.add(i, prod({e(i), e(i + 1), v(i)}), e(i) * v(i + 1));
    }
  }
}

void build_brauer_f(Builder& b) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    b.add(i, named_f0(i), f0_brauer(i));
    b.add(i, named_f1(i), f1_brauer(i));
    b.add(i, named_f2(i), f2_brauer(i));
  }
}

void build_brvtl(Builder& b) {
  Coefficients k = vtl_reduced(b.params());
  for (int i = 1; i <= b.n() - 2; ++i) {
    Expr lhs = sum({{k.vw, named("(v_i-v_{i+1})", v_diff(i))},
                    {k.f0, named("[F]_0", f0_brauer(i))},
                    {k.f1, named("[F]_1", f1_brauer(i)) + named("[F]_2", f2_brauer(i))}});
    auto& inst = b.add(i, lhs, Expr(), InstanceKind::Parametric);
    inst.rho_ansatz = true;
    inst.brauer_form = brauer_terms(i, k);
    inst.coefficients = {{"a^2c", k.vw}, {"b(a^2+ab*lambda+b^2+c(2a+b))", k.f0}, {"b^2c", k.f1}};
  }
}

void build_star(Builder& b, bool first) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    Expr lhs = first ? prod({v(i), e_star(i + 1), e_star(i)}) : prod({e_star(i), e_star(i + 1), v(i)});
    Expr rhs = first ? prod({e_star(i + 1), e_star(i), v(i + 1)}) : prod({v(i + 1), e_star(i), e_star(i + 1)});
    b.add(i, lhs, rhs, InstanceKind::Quotient).brauer_form = brauer_terms(i, kStarForbidden);
  }
}

void build_fu22(Builder& b) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    b.add(i, prod({v(i), e_star(i + 1), e_star(i)}), prod({e_star(i + 1), e_star(i), v(i + 1)}),
          InstanceKind::Quotient)
        .brauer_form = brauer_terms(i, kStarForbidden);
    b.add(i, prod({e_star(i), e_star(i + 1), v(i)}), prod({v(i + 1), e_star(i), e_star(i + 1)}),
          InstanceKind::Quotient)
        .brauer_form = brauer_terms(i, kStarForbidden);
  }
}

void build_conj(Builder& b) {
  for (int i = 1; i <= b.n() - 2; ++i) {
    b.add(i, e(i + 1), prod({v(i), v(i + 1), e(i), v(i + 1), v(i)}));
  }
}

struct Entry {
  RelationFamily info;
  std::function<void(Builder&)> build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"BGR", "rho_i rho_{i+1} rho_i = rho_{i+1} rho_i rho_{i+1}; rho_i rho_j = rho_j rho_i, |i-j|>1", 3}, build_bgr},
      {{"VCR", "v_i^2 = 1; v_i v_{i+1} v_i = v_{i+1} v_i v_{i+1}; v_i v_j = v_j v_i, |i-j|>1", 2}, build_vcr},
      {{"VBR", "rho_i v_j = v_j rho_i, j != i+-1; v_i rho_{i+1} v_i = v_{i+1} rho_i v_{i+1}", 2}, build_vbr},
      {{"F1", "v_i rho_{i+1} rho_i = rho_{i+1} rho_i v_{i+1}", 3}, [](Builder& b) { build_forbidden(b, true); }},
      {{"F2", "rho_i rho_{i+1} v_i = v_{i+1} rho_i rho_{i+1}", 3}, [](Builder& b) { build_forbidden(b, false); }},
      {{"TLR", "E_i^2 = lambda E_i; E_i E_{i+-1} E_i = E_i; E_i E_j = E_j E_i, |i-j|>1", 2}, build_tlr},
      {{"VEV", "v_i E_{i+1} v_i = v_{i+1} E_i v_{i+1}; E_i v_j = v_j E_i, j != i+-1", 2}, build_vev},
      {{"vTL", "(a^2b+ab^2lambda+b^3)(E_i-E_{i+1}) + a^2c(v_i-v_{i+1}) + abc(E_iv_i+v_iE_i-E_{i+1}v_{i+1}-v_{i+1}E_{i+1}) + b^2c([F]_0+[F]_1+[F]_2) = 0", 3}, build_vtl},
      {{"FF1", "a^2(v_i-v_{i+1}) = -ab(v_iE_i-E_{i+1}v_{i+1}+v_iE_{i+1}-E_iv_{i+1}) - b^2[F]_1", 3}, [](Builder& b) { build_ff(b, true); }},
      {{"wTL1", "(a^2b+ab^2lambda+b^3)(E_i-E_{i+1}) + b^2c([F]_0+[F]_2) + abc(E_iv_i-v_{i+1}E_{i+1}-v_iE_{i+1}+E_iv_{i+1}) = 0", 3}, [](Builder& b) { build_wtl(b, true); }},
      {{"FF2", "a^2(v_i-v_{i+1}) = -ab(E_iv_i-v_{i+1}E_{i+1}+E_{i+1}v_i-v_{i+1}E_i) - b^2[F]_2", 3}, [](Builder& b) { build_ff(b, false); }},
      {{"wTL2", "(a^2b+ab^2lambda+b^3)(E_i-E_{i+1}) + b^2c([F]_0+[F]_1) + abc(v_iE_i-E_{i+1}v_{i+1}-E_{i+1}v_i+v_{i+1}E_i) = 0", 3}, [](Builder& b) { build_wtl(b, false); }},
      {{"ab", "c = 0: (a^2b+ab^2lambda+b^3)(E_i-E_{i+1}) = 0", 3}, build_ab},
      {{"vTL.a0", "a = 0: b(E_i-E_{i+1}) + c([F]_0+[F]_1+[F]_2) = 0", 3}, [](Builder& b) { build_a0(b, true, true, {}); }},
      {{"wTL1.a0", "a = 0: b(E_i-E_{i+1}) + c([F]_0+[F]_2) = 0; [F]_1 = 0", 3}, [](Builder& b) { build_a0(b, false, true, {1}); }},
      {{"wTL2.a0", "a = 0: b(E_i-E_{i+1}) + c([F]_0+[F]_1) = 0; [F]_2 = 0", 3}, [](Builder& b) { build_a0(b, true, false, {2}); }},
      {{"uTL.a0", "a = 0: [F]_1 = [F]_2 = 0; b(E_i-E_{i+1}) + c[F]_0 = 0", 3}, [](Builder& b) { build_a0(b, false, false, {1, 2}); }},
      {{"brauer", "E_iv_i = v_iE_i = E_i; E_iv_j = v_jE_i; v_{i+-1}E_iE_{i+-1} = v_iE_{i+-1}; E_{i+-1}E_iv_{i+-1} = E_{i+-1}v_i", 2}, build_brauer},
      {{"brauer.F", "[F]_0 = E_i-E_{i+1}; [F]_1 = v_{i+1}E_i-E_{i+1}v_i; [F]_2 = E_iv_{i+1}-v_iE_{i+1}", 3}, build_brauer_f},
      {{"brvtl", "a^2c(v_i-v_{i+1}) + b(a^2+ab*lambda+b^2+c(2a+b))[F]_0 + b^2c([F]_1+[F]_2) = 0", 3}, build_brvtl},
      {{"<F1>", "v_i E*_{i+1} E*_i = E*_{i+1} E*_i v_{i+1}, E* = 1 - E", 3}, [](Builder& b) { build_star(b, true); }},
      {{"<F2>", "E*_i E*_{i+1} v_i = v_{i+1} E*_i E*_{i+1}, E* = 1 - E", 3}, [](Builder& b) { build_star(b, false); }},
      {{"fu22", "P_i P*_{i+1} P*_i = P*_{i+1} P*_i P_{i+1}; P*_i P*_{i+1} P_i = P_{i+1} P*_i P*_{i+1}", 3}, build_fu22},
      {{"conj", "E_{i+1} = v_i v_{i+1} E_i v_{i+1} v_i", 3}, build_conj},
  };
  return entries;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& entry : registry()) {
    if (entry.info.name == name) return entry;
  }
  throw std::invalid_argument("unknown relation family '" + std::string(name) + "'");
}

}  // namespace

const std::vector<RelationFamily>& relation_families() {
  static const std::vector<RelationFamily> families = [] {
    std::vector<RelationFamily> out;
    for (const auto& entry : registry()) out.push_back(entry.info);
    return out;
  }();
  return families;
}

const RelationFamily& relation_family(std::string_view name) { return find_entry(name).info; }

std::vector<RelationInstance> relation_instances(std::string_view family, int n, const RhoParams& params) {
  const Entry& entry = find_entry(family);
  if (n < entry.info.min_n) {
    throw std::invalid_argument("family " + entry.info.name + " needs n >= " + std::to_string(entry.info.min_n) +
                                ", got " + std::to_string(n));
  }
  params.discriminant();
  Builder builder(entry.info.name, n, params);
  entry.build(builder);
  return builder.take();
}

}  // namespace vtl
