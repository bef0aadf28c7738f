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

#include <vector>

#include "vtl/algebra_element.hpp"
#include "vtl/dense_matrix.hpp"
#include "vtl/generator.hpp"
#include "vtl/representation.hpp"

namespace vtl {

/// n tensor factors of dimension d; operators are d^n × d^n and λ = d.
/// Basis |i_1 … i_n⟩ in lexicographic order, leftmost factor most significant.
struct RepConfig {
  int n = 2;
  int d = 2;

  std::size_t dimension() const;
  /// Throws std::invalid_argument unless n ≥ 1, d ≥ 2 and d^n ≤ 256.
  void validate() const;
};

/// P|ξη⟩ = |ηξ⟩ on ℂ^d ⊗ ℂ^d.
DenseMatrix perm_matrix(int d);
/// P★|ξη⟩ = δ_{ξη} Σ_i |ii⟩.
DenseMatrix ptranspose_matrix(int d);
/// Transpose of the second tensor factor of a d² × d² operator.
DenseMatrix partial_transpose_second(const DenseMatrix& m, int d);
/// I_{d^{i-1}} ⊗ op ⊗ I_{d^{n-i-1}}.
DenseMatrix site_embed(const DenseMatrix& op, int site, const RepConfig& cfg);
/// 1 − P★ on two qubits; throws std::invalid_argument unless cfg.d == 2.
DenseMatrix pstar_complement(const RepConfig& cfg);

/// A word in E_i, v_i whose diagram product equals λ^loops · the diagram.
struct Factorization {
  std::vector<GeneratorSymbol> word;
  int loops = 0;
};

/// Writes a Brauer diagram as σ · E_1E_3⋯E_{2t−1} · τ with σ, τ products of
/// adjacent crossings; t is the number of cups.
Factorization factorize(const Matching& m);

/// Image of a diagram-algebra element; the loop value must be d.
DenseMatrix rep_element(const AlgebraElement& x, const RepConfig& cfg);

/// E_i ↦ P★ at site i, v_i ↦ P at site i, loop value d.
class MatrixRep {
 public:
  using Element = DenseMatrix;

  explicit MatrixRep(RepConfig cfg);

  const RepConfig& config() const { return cfg_; }
  int strands() const { return cfg_.n; }
  QuadScalar loop_value() const { return QuadScalar(static_cast<long>(cfg_.d)); }
  std::string name() const { return "matrix"; }
  bool is_concrete_model() const { return true; }

  Element identity() const { return DenseMatrix::identity(cfg_.dimension()); }
  Element zero() const { return DenseMatrix(cfg_.dimension(), cfg_.dimension()); }
  Element generator(GeneratorSymbol s, const RhoParams& params) const;
  Element multiply(const Element& x, const Element& y) const { return x * y; }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element scale(const QuadScalar& s, const Element& x) const { return s * x; }
  bool is_zero(const Element& x) const { return x.is_zero(); }
  std::size_t term_count(const Element& x) const { return x.nonzero_count(); }
  double max_magnitude(const Element& x) const;
  std::vector<std::vector<QuadScalar>> coordinates(const std::vector<Element>& xs) const;
  Json witness(const Element& x) const;
  Json to_json(const Element& x) const { return vtl::to_json(x); }

 private:
  RepConfig cfg_;
  DenseMatrix e_;
  DenseMatrix v_;
};

}  // namespace vtl
