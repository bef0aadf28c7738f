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

#include "vtl/dense_matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vtl {

namespace {

void require_same_shape(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::size_t DenseMatrix::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& v : data_) count += v.is_zero() ? 0 : 1;
  return count;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  }
  return t;
}

QuadScalar DenseMatrix::trace() const {
  QuadScalar t;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  require_same_shape(x, y);
  DenseMatrix r = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!y(i, j).is_zero()) r.at(i, j) += y(i, j);
    }
  }
  return r;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) { return x + QuadScalar(-1) * y; }

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  DenseMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const QuadScalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        const QuadScalar& ykj = y(k, j);
        if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
      }
    }
  }
  return r;
}

DenseMatrix operator*(const QuadScalar& s, const DenseMatrix& x) {
  DenseMatrix r(x.rows(), x.cols());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (!x(i, j).is_zero()) r.at(i, j) = s * x(i, j);
    }
  }
  return r;
}

DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k) {
        for (std::size_t l = 0; l < y.cols(); ++l) {
          if (!y(k, l).is_zero()) r.at(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
      }
    }
  }
  return r;
}

std::optional<DenseMatrix> invert(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  // col_at[k]: original column currently sitting in position k.
  std::vector<std::size_t> col_at(n);
  std::iota(col_at.begin(), col_at.end(), 0);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n;
    std::size_t pc = n;
    for (std::size_t r = k; r < n && pr == n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (!a(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) return std::nullopt;
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(k, c), a.at(pr, c));
        std::swap(inv.at(k, c), inv.at(pr, c));
      }
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, k), a.at(r, pc));
      std::swap(col_at[k], col_at[pc]);
    }
    QuadScalar scale = a(k, k).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!a(k, c).is_zero()) a.at(k, c) *= scale;
      if (!inv(k, c).is_zero()) inv.at(k, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      QuadScalar factor = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(k, c).is_zero()) a.at(r, c) -= factor * a(k, c);
        if (!inv(k, c).is_zero()) inv.at(r, c) -= factor * inv(k, c);
      }
    }
  }
  // With column permutation Q, the row operations L give L·A·Q = 1,
  // hence A⁻¹ = Q·L: row k of L becomes row col_at[k].
  DenseMatrix result(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < n; ++c) result.at(col_at[k], c) = inv(k, c);
  }
  return result;
}

std::size_t rank(std::vector<std::vector<QuadScalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    QuadScalar inv = rows[r][c].inverse();
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      QuadScalar factor = rows[k][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[k][j] -= factor * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const DenseMatrix& m) {
  std::vector<std::vector<QuadScalar>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].assign(m.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
                   m.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols()));
  }
  return rank(std::move(rows));
}

}  // namespace vtl
