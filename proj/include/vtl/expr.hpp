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

#include <memory>
#include <string>
#include <vector>

#include "vtl/generator.hpp"
#include "vtl/quad_scalar.hpp"

namespace vtl {

/// Immutable formal expression over generator symbols: scalar-weighted
/// sums, ordered products, and named sub-expressions (the bracketed
/// groups of a relation, kept so reports can say which group misbehaves).
class Expr {
 public:
  enum class Kind { Identity, Generator, Sum, Product, Named };

  struct Term;

  /// The zero expression (empty sum).
  Expr();

  static Expr one();
  static Expr gen(GeneratorSymbol s);
  /// Zero coefficients are kept so that a specialised relation still shows
  /// every group.
  static Expr sum(std::vector<Term> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr named(std::string name, Expr body);

  Kind kind() const;
  const GeneratorSymbol& symbol() const;
  const std::vector<Term>& terms() const;
  const std::vector<Expr>& factors() const;
  const std::string& name() const;
  const Expr& body() const;

  /// Largest generator index mentioned (0 if none).
  int max_index() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Term {
  QuadScalar coefficient;
  Expr expr;
};

Expr operator*(const Expr& x, const Expr& y);
Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(const QuadScalar& s, const Expr& x);

/// Named sub-expressions in depth-first order, outermost first.
std::vector<Expr> named_groups(const Expr& x);

}  // namespace vtl
