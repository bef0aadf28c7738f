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

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtl/generator.hpp"
#include "vtl/quad_scalar.hpp"
#include "vtl/rho.hpp"
#include "vtl/serialize.hpp"

namespace vtl {

/// Raised when a word asks for ρ_i^{-1} and ρ_i has no inverse.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear representation of the generators E_i, v_i, ρ_i^{±1} on a fixed
/// number of strands with a fixed loop value.
template <class R>
concept Representation = requires(const R& rep, const typename R::Element& x, GeneratorSymbol s,
                                  const RhoParams& p, const QuadScalar& q,
                                  const std::vector<typename R::Element>& xs) {
  { rep.strands() } -> std::convertible_to<int>;
  { rep.loop_value() } -> std::convertible_to<QuadScalar>;
  { rep.name() } -> std::convertible_to<std::string>;
  /// True for a concrete operator model rather than the free diagram algebra.
  { rep.is_concrete_model() } -> std::convertible_to<bool>;
  { rep.identity() } -> std::same_as<typename R::Element>;
  { rep.zero() } -> std::same_as<typename R::Element>;
  { rep.generator(s, p) } -> std::same_as<typename R::Element>;
  { rep.multiply(x, x) } -> std::same_as<typename R::Element>;
  { rep.add(x, x) } -> std::same_as<typename R::Element>;
  { rep.scale(q, x) } -> std::same_as<typename R::Element>;
  { rep.is_zero(x) } -> std::convertible_to<bool>;
  /// Nonzero diagram terms or matrix entries.
  { rep.term_count(x) } -> std::convertible_to<std::size_t>;
  /// Largest |coefficient| as a decimal approximation.
  { rep.max_magnitude(x) } -> std::convertible_to<double>;
  /// Coordinate vectors of xs over one common basis.
  { rep.coordinates(xs) } -> std::same_as<std::vector<std::vector<QuadScalar>>>;
  /// One nonzero term of x, or null for zero.
  { rep.witness(x) } -> std::same_as<Json>;
  { rep.to_json(x) } -> std::same_as<Json>;
};

}  // namespace vtl
