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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtl/expr.hpp"
#include "vtl/relations.hpp"
#include "vtl/representation.hpp"
#include "vtl/rho.hpp"

namespace vtl {

/// Value of a formal expression in a representation.
/// Throws std::out_of_range if an index does not fit the representation and
/// NotInvertible for a singular ρ^{-1}.
template <Representation R>
typename R::Element evaluate(const Expr& x, const R& rep, const RhoParams& params) {
  switch (x.kind()) {
    case Expr::Kind::Identity:
      return rep.identity();
    case Expr::Kind::Generator: {
      const GeneratorSymbol& s = x.symbol();
      if (s.index < 1 || s.index > rep.strands() - 1) {
        throw std::out_of_range("generator " + s.to_string() + " needs more than " +
                                std::to_string(rep.strands()) + " strands");
      }
      return rep.generator(s, params);
    }
    case Expr::Kind::Sum: {
      auto acc = rep.zero();
      for (const auto& t : x.terms()) acc = rep.add(acc, rep.scale(t.coefficient, evaluate(t.expr, rep, params)));
      return acc;
    }
    case Expr::Kind::Product: {
      auto acc = rep.identity();
      for (const auto& f : x.factors()) acc = rep.multiply(acc, evaluate(f, rep, params));
      return acc;
    }
    case Expr::Kind::Named:
      return evaluate(x.body(), rep, params);
  }
  throw std::logic_error("unhandled expression kind");
}

template <Representation R>
typename R::Element evaluate_word(const GeneratorWord& word, const R& rep, const RhoParams& params) {
  if (word.n != rep.strands()) {
    throw std::invalid_argument("word on " + std::to_string(word.n) + " strands, representation on " +
                                std::to_string(rep.strands()));
  }
  std::vector<Expr> factors;
  for (const auto& s : word.symbols) factors.push_back(Expr::gen(s));
  return evaluate(Expr::product(std::move(factors)), rep, params);
}

/// What the residual lhs − rhs is expected to do:
///  - Holds: vanish;
///  - Nonzero: not vanish (a negative control);
///  - Informational: no claim can be made, the outcome is only recorded.
enum class Expectation { Holds, Nonzero, Informational };
/// Degenerate: b = 0 in a relation derived from the ρ ansatz; not evaluated.
enum class CheckStatus { Checked, Degenerate };

std::string to_string(Expectation e);
std::string to_string(CheckStatus s);

struct GroupValue {
  std::string name;
  bool zero;
};

struct CheckReport {
  std::string family;
  std::string relation;
  int n = 0;
  int site = 0;
  std::optional<int> partner;
  std::string rep;
  RhoParams params;
  CheckStatus status = CheckStatus::Checked;
  Expectation expectation = Expectation::Holds;
  bool residual_zero = false;
  std::size_t residual_terms = 0;
  double residual_max_abs = 0;
  Json witness;
  /// Whether v_i − v_{i+1}, [F]_0, [F]_1, [F]_2 are linearly independent in
  /// the representation; set for instances that carry a Brauer-reduced form.
  std::optional<bool> brauer_groups_independent;
  /// Named groups of the relation and whether each vanishes; only filled in
  /// when the residual is nonzero.
  std::vector<GroupValue> groups;
  std::string note;

  bool failed() const;
  bool negative_control() const;
};

Json to_json(const CheckReport& report);

namespace detail {

struct ExpectationInputs {
  bool concrete_model;
  bool coefficients_zero;
  std::optional<bool> nonzero_groups_independent;
};

Expectation expected_outcome(const RelationInstance& inst, const RhoParams& params,
                             const ExpectationInputs& in);

bool all_coefficients_zero(const RelationInstance& inst);

}  // namespace detail

/// Evaluates lhs − rhs of `inst` in `rep`.
/// Throws std::invalid_argument if params.lambda differs from the
/// representation's loop value and std::out_of_range if the instance does
/// not fit.
template <Representation R>
CheckReport check_relation(const RelationInstance& inst, const R& rep, const RhoParams& params) {
  if (!(params.lambda == rep.loop_value())) {
    throw std::invalid_argument("lambda " + params.lambda.to_string() + " differs from the representation's loop value " +
                                QuadScalar(rep.loop_value()).to_string());
  }
  if (std::max(inst.lhs.max_index(), inst.rhs.max_index()) > rep.strands() - 1) {
    throw std::out_of_range("instance " + inst.relation + " does not fit on " + std::to_string(rep.strands()) +
                            " strands");
  }
  CheckReport report;
  report.family = inst.family;
  report.relation = inst.relation;
  report.n = rep.strands();
  report.site = inst.site;
  report.partner = inst.partner;
  report.rep = rep.name();
  report.params = params;
  if (inst.rho_ansatz && params.b.is_zero()) {
    report.status = CheckStatus::Degenerate;
    report.expectation = Expectation::Informational;
    report.note = "b = 0 forces v_i = v_{i+1}; relation not evaluated";
    return report;
  }

  auto residual = rep.add(evaluate(inst.lhs, rep, params), rep.scale(-1, evaluate(inst.rhs, rep, params)));
  report.residual_zero = rep.is_zero(residual);
  report.residual_terms = rep.term_count(residual);
  report.residual_max_abs = rep.max_magnitude(residual);
  report.witness = rep.witness(residual);

  detail::ExpectationInputs inputs{rep.is_concrete_model(), detail::all_coefficients_zero(inst), std::nullopt};
  if (!inst.brauer_form.empty()) {
    std::vector<typename R::Element> all;
    std::vector<typename R::Element> active;
    for (const auto& term : inst.brauer_form) {
      auto value = evaluate(term.element, rep, params);
      if (!term.coefficient.is_zero()) active.push_back(value);
      all.push_back(std::move(value));
    }
    report.brauer_groups_independent = rank(rep.coordinates(all)) == all.size();
    inputs.nonzero_groups_independent = rank(rep.coordinates(active)) == active.size();
  }
  report.expectation = detail::expected_outcome(inst, params, inputs);

  if (!report.residual_zero) {
    std::vector<Expr> named = named_groups(inst.lhs);
    for (auto& g : named_groups(inst.rhs)) named.push_back(std::move(g));
    for (const auto& g : named) report.groups.push_back({g.name(), rep.is_zero(evaluate(g, rep, params))});
  }
  return report;
}

}  // namespace vtl
