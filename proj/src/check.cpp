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


#include "vtl/check.hpp"

namespace vtl {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds:
      return "holds";
    case Expectation::Nonzero:
      return "nonzero";
    case Expectation::Informational:
      return "informational";
  }
  return "?";
}

std::string to_string(CheckStatus s) { return s == CheckStatus::Checked ? "checked" : "degenerate"; }

bool CheckReport::failed() const {
  if (status != CheckStatus::Checked) return false;
  if (expectation == Expectation::Holds) return !residual_zero;
  if (expectation == Expectation::Nonzero) return residual_zero;
  return false;
}

bool CheckReport::negative_control() const {
  return status == CheckStatus::Checked && expectation == Expectation::Nonzero && !residual_zero;
}

Json to_json(const CheckReport& r) {
  Json out = Json::object();
  out["family"] = r.family;
  out["relation"] = r.relation;
  out["n"] = r.n;
  out["site"] = r.site;
  if (r.partner) out["partner"] = *r.partner;
  out["rep"] = r.rep;
  out["params"] = to_json(r.params);
  out["status"] = to_string(r.status);
  out["expectation"] = to_string(r.expectation);
  out["residual_zero"] = r.residual_zero;
  out["residual_terms"] = r.residual_terms;
  out["residual_max_abs"] = r.residual_max_abs;
  out["witness"] = r.witness;
  if (r.brauer_groups_independent) out["brauer_groups_independent"] = *r.brauer_groups_independent;
  if (!r.groups.empty()) {
    Json groups = Json::array();
    for (const auto& g : r.groups) groups.push_back({{"name", g.name}, {"zero", g.zero}});
    out["groups"] = std::move(groups);
  }
  out["passed"] = !r.failed();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

namespace detail {

bool all_coefficients_zero(const RelationInstance& inst) {
  for (const auto& t : inst.brauer_form) {
    if (!t.coefficient.is_zero()) return false;
  }
  return true;
}

Expectation expected_outcome(const RelationInstance& inst, const RhoParams& params, const ExpectationInputs& in) {
  if (inst.kind == InstanceKind::Identity) return Expectation::Holds;
  // The d = 2 operator model satisfies the forbidden moves once ρ = a(1 − E) + cv.
  if (inst.kind == InstanceKind::Quotient && in.concrete_model && params.lambda == QuadScalar(2)) {
    const bool parametric = inst.rho_ansatz || inst.uses_rho;
    if (!parametric || params.a == -params.b) return Expectation::Holds;
  }
  if (inst.brauer_form.empty()) return Expectation::Informational;
  if (in.coefficients_zero) return Expectation::Holds;
  if (in.nonzero_groups_independent.value_or(false)) return Expectation::Nonzero;
  return Expectation::Informational;
}

}  // namespace detail

}  // namespace vtl
