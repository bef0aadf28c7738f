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

#include <json.hpp>

#include "vtl/algebra_element.hpp"
#include "vtl/dense_matrix.hpp"
#include "vtl/matching.hpp"
#include "vtl/quad_scalar.hpp"
#include "vtl/rho.hpp"

namespace vtl {

using Json = nlohmann::ordered_json;

/// {x_num, x_den, y_num, y_den, D_num, D_den}; numbers that fit in 64 bits
/// are emitted as JSON integers, larger ones as decimal strings.
Json to_json(const QuadScalar& s);
/// Sorted list of [label, label] pairs, e.g. [["T1","B1"],["T2","T3"]].
Json to_json(const Matching& m);
/// List of {matching, coefficient} records in canonical term order.
Json to_json(const AlgebraElement& x);
/// {rows, cols, D, entries: [[x_num, x_den, y_num, y_den], ...]} row-major.
Json to_json(const DenseMatrix& m);
/// {a, b, c, lambda, D}.
Json to_json(const RhoParams& p);

}  // namespace vtl
