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

#include <cstdint>
#include <random>

#include "vtl/algebra_element.hpp"
#include "vtl/generator.hpp"
#include "vtl/matching.hpp"

namespace vtl {

using Rng = std::mt19937_64;

/// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
Rational random_rational(Rng& rng, long max_num = 9, long max_den = 5);
/// Uniform over all (2n−1)!! perfect matchings.
Matching random_matching(Rng& rng, int n);
/// Up to `terms` random diagrams with small nonzero rational coefficients.
AlgebraElement random_element(Rng& rng, int n, int terms);
/// Word of E_i and v_i symbols with length drawn from [0, max_length].
GeneratorWord random_word(Rng& rng, int n, int max_length);

}  // namespace vtl
