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
#include <string>
#include <string_view>
#include <vector>

#include "vtl/expr.hpp"
#include "vtl/rho.hpp"

namespace vtl {

/// How an instance relates to the Brauer algebra D_n(λ):
///  - Identity: holds in D_n(λ) for every λ and every (a, b, c);
///  - Parametric: holds iff the coefficients of its Brauer-reduced form vanish;
///  - Quotient: a forbidden-move relation that D_n(λ) does not satisfy but
///    that the concrete d = 2 tensor model does.
enum class InstanceKind { Identity, Parametric, Quotient };

/// One summand of an instance's residual rewritten in D_n(λ) over the
/// groups v_i − v_{i+1}, [F]_0, [F]_1, [F]_2.
struct BrauerTerm {
  QuadScalar coefficient;
  std::string group;
  Expr element;
};

struct CoefficientSlot {
  std::string name;
  QuadScalar value;
};

struct RelationInstance {
  std::string family;
  std::string relation;
  int n = 0;
  int site = 0;
  std::optional<int> partner;
  Expr lhs;
  Expr rhs;
  InstanceKind kind = InstanceKind::Identity;
  /// Derived from the ρ ansatz; b = 0 is a degenerate regime for these.
  bool rho_ansatz = false;
  /// Built from ρ itself, so its concrete-model claim needs a = −b.
  bool uses_rho = false;
  std::vector<BrauerTerm> brauer_form;
  /// Scalar slots filled from the parameters (e.g. a²b + ab²λ + b³).
  std::vector<CoefficientSlot> coefficients;
};

struct RelationFamily {
  std::string name;
  std::string statement;
  int min_n;
};

/// The closed registry, in presentation order.
const std::vector<RelationFamily>& relation_families();
/// Throws std::invalid_argument for unknown names.
const RelationFamily& relation_family(std::string_view name);

/// Every site instantiation of a family on n strands, in ascending site
/// order. Throws std::invalid_argument for an unknown family or n below the
/// family's minimum.
std::vector<RelationInstance> relation_instances(std::string_view family, int n,
                                                 const RhoParams& params);

/// Building blocks shared by the registry, the cross-check and tests.
namespace groups {

Expr e(int i);
Expr v(int i);
Expr rho(int i);
/// E★_i = 1 − E_i.
Expr e_star(int i);

/// [F]_0 = E_i v_{i+1} E_i − E_{i+1} v_i E_{i+1}.
Expr f0(int i);
/// [F]_1 = v_i E_{i+1} E_i − E_{i+1} E_i v_{i+1}.
Expr f1(int i);
/// [F]_2 = E_i E_{i+1} v_i − v_{i+1} E_i E_{i+1}; the b²c group of the
/// braid relation under ρ, and the b² term of the second forbidden move.
Expr f2(int i);

/// Reduced forms in the Brauer algebra.
Expr f0_brauer(int i);  // E_i − E_{i+1}
Expr f1_brauer(int i);  // v_{i+1} E_i − E_{i+1} v_i
Expr f2_brauer(int i);  // E_i v_{i+1} − v_i E_{i+1}
Expr v_diff(int i);     // v_i − v_{i+1}
Expr e_diff(int i);     // E_i − E_{i+1}

}  // namespace groups

}  // namespace vtl
