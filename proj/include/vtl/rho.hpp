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

#include "vtl/algebra_element.hpp"
#include "vtl/quad_scalar.hpp"

namespace vtl {

/// Coefficients of ρ_i = a·1 + b·E_i + c·v_i together with the loop value λ.
struct RhoParams {
  QuadScalar a{1};
  QuadScalar b{0};
  QuadScalar c{0};
  QuadScalar lambda{2};

  /// Radicand shared by the irrational members (0 if all are rational).
  /// Throws DiscriminantMismatch if two members live in different fields.
  Rational discriminant() const;
};

struct BraidRoots {
  QuadScalar plus;   // −(λ − √(λ²−4))/2
  QuadScalar minus;  // −(λ + √(λ²−4))/2
};

/// Roots of b² + λb + 1 = 0, i.e. a²b + ab²λ + b³ = 0 at a = 1.
/// λ must be rational; the roots live in ℚ(√(λ²−4)).
BraidRoots solve_ab(const QuadScalar& lambda);

/// a + bE_i + cv_i on n strands.
AlgebraElement rho_element(int i, int n, const RhoParams& params);

/// ρ_i^{-1} in the diagram algebra, or nullopt if ρ_i is not invertible.
/// ρ_i lives in the commutative subalgebra span{1, E_i, v_i}, which contains
/// its inverse whenever one exists; invertible iff a² ≠ c² and a + bλ + c ≠ 0.
std::optional<AlgebraElement> rho_inverse_element(int i, int n, const RhoParams& params);

}  // namespace vtl
