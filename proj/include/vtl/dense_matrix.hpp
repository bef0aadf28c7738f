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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vtl/quad_scalar.hpp"

namespace vtl {

/// Row-major matrix with exact entries in ℚ(√D).
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const QuadScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  QuadScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<QuadScalar>& entries() const { return data_; }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  DenseMatrix transpose() const;
  QuadScalar trace() const;
  std::string to_string() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<QuadScalar> data_;
};

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(const QuadScalar& s, const DenseMatrix& x);

/// Kronecker product x ⊗ y.
DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y);

/// Exact inverse by Gauss-Jordan elimination with full pivoting;
/// nullopt when the matrix is singular. Throws std::invalid_argument
/// for non-square input.
std::optional<DenseMatrix> invert(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);
/// Rank of the span of the given equal-length vectors.
std::size_t rank(std::vector<std::vector<QuadScalar>> vectors);

}  // namespace vtl
