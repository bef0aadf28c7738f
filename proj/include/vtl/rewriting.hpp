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
#include <optional>
#include <string>
#include <vector>

#include "vtl/expr.hpp"
#include "vtl/relations.hpp"
#include "vtl/rho.hpp"

namespace vtl {

/// Noncommutative polynomial in the letters of one site i:
/// E = E_i, F = E_{i+1}, v = v_i, w = v_{i+1}. The empty word is 1.
using FreePoly = std::map<std::string, QuadScalar>;

/// Expands an expression over generators at sites i and i+1, substituting
/// ρ = a + bE + cv. Throws std::invalid_argument for any other index.
FreePoly expand(const Expr& x, int site, const RhoParams& params);

/// Normal form under the E/v relations of two adjacent sites:
///   EE → λE, FF → λF, vv → 1, ww → 1, EFE → E, FEF → F,
///   wvw → vwv, wEw → vFv, Ewv → wvF, vwE → Fvw.
/// Every rule shortens a word or lowers it in the order F < v < w < E, so
/// rewriting terminates.
FreePoly normal_form(const FreePoly& p, const QuadScalar& lambda);

std::string to_string(const FreePoly& p);

/// Re-derivation of a stored linear-combination relation by brute
/// expansion of the relation it comes from under ρ.
struct CrossCheck {
  std::string family;
  std::vector<CoefficientSlot> stored;
  /// Coefficients of the brute residual over the relation's groups, or
  /// nullopt if the residual is not in their span.
  std::optional<std::vector<QuadScalar>> derived;
  bool coefficients_match = false;
  /// Normal form of the stored lhs − rhs equals that of the brute residual.
  bool normal_forms_match = false;
  FreePoly brute_residual;
};

/// Supported families: vTL (from the braid relation), FF1 and FF2 (from
/// the two forbidden moves).
CrossCheck cross_check(std::string_view family, const RhoParams& params);

}  // namespace vtl
