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


#include "vtl/tensor_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vtl {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void check_dimension(int d) {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2, got " + std::to_string(d));
}

// Adjacent crossings whose product is the permutation diagram joining T_p to B_{target[p]}.
std::vector<GeneratorSymbol> permutation_word(std::vector<int> target) {
  std::vector<GeneratorSymbol> word;
  for (;;) {
    auto it = std::adjacent_find(target.begin(), target.end(), std::greater<>());
    if (it == target.end()) return word;
    const int k = static_cast<int>(it - target.begin());
    word.push_back(V(k + 1));
    std::iter_swap(it, it + 1);
  }
}

}  // namespace

std::size_t RepConfig::dimension() const { return ipow(static_cast<std::size_t>(d), n); }

void RepConfig::validate() const {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  check_dimension(d);
  std::size_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= static_cast<std::size_t>(d);
    if (dim > 256) {
      throw std::invalid_argument("d^n = " + std::to_string(d) + "^" + std::to_string(n) + " exceeds 256");
    }
  }
}

DenseMatrix perm_matrix(int d) {
  check_dimension(d);
  const auto D = static_cast<std::size_t>(d);
  DenseMatrix p(D * D, D * D);
  for (std::size_t xi = 0; xi < D; ++xi) {
    for (std::size_t eta = 0; eta < D; ++eta) p.at(eta * D + xi, xi * D + eta) = 1;
  }
  return p;
}

DenseMatrix ptranspose_matrix(int d) {
  check_dimension(d);
  const auto D = static_cast<std::size_t>(d);
  DenseMatrix p(D * D, D * D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t xi = 0; xi < D; ++xi) p.at(i * D + i, xi * D + xi) = 1;
  }
  return p;
}

DenseMatrix partial_transpose_second(const DenseMatrix& m, int d) {
  check_dimension(d);
  const auto D = static_cast<std::size_t>(d);
  if (m.rows() != D * D || m.cols() != D * D) throw std::invalid_argument("partial transpose needs a d^2 x d^2 matrix");
  DenseMatrix r(D * D, D * D);
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t j = 0; j < D; ++j) {
        for (std::size_t l = 0; l < D; ++l) r.at(i * D + k, j * D + l) = m(i * D + l, j * D + k);
      }
    }
  }
  return r;
}

DenseMatrix site_embed(const DenseMatrix& op, int site, const RepConfig& cfg) {
  cfg.validate();
  if (site < 1 || site > cfg.n - 1) {
    throw std::out_of_range("site " + std::to_string(site) + " outside 1.." + std::to_string(cfg.n - 1));
  }
  const auto D = static_cast<std::size_t>(cfg.d);
  if (op.rows() != D * D || op.cols() != D * D) throw std::invalid_argument("site operator must be d^2 x d^2");
  const auto left = DenseMatrix::identity(ipow(D, site - 1));
  const auto right = DenseMatrix::identity(ipow(D, cfg.n - site - 1));
  return kron(kron(left, op), right);
}

DenseMatrix pstar_complement(const RepConfig& cfg) {
  if (cfg.d != 2) throw std::invalid_argument("the complement 1 - P* is defined here only for d = 2");
  return DenseMatrix::identity(4) - ptranspose_matrix(2);
}

Factorization factorize(const Matching& m) {
  const int n = m.strands();
  // Top and bottom positions of m in the normal form E_1E_3⋯E_{2t−1}.
  std::vector<int> top_slot(n, -1);
  std::vector<int> bottom_slot(n, -1);
  int next_top = 0;
  int next_bottom = 0;
  for (int p = 0; p < n; ++p) {
    const int q = m.partner(p);
    if (q < n && q > p) {
      top_slot[p] = next_top++;
      top_slot[q] = next_top++;
    }
  }
  for (int p = n; p < 2 * n; ++p) {
    const int q = m.partner(p);
    if (q >= n && q > p) {
      bottom_slot[p - n] = next_bottom++;
      bottom_slot[q - n] = next_bottom++;
    }
  }
  const int cups = next_top / 2;
  for (int p = 0; p < n; ++p) {
    const int q = m.partner(p);
    if (q >= n) {
      top_slot[p] = next_top;
      bottom_slot[q - n] = next_top++;
    }
  }

  Factorization f;
  f.word = permutation_word(top_slot);
  for (int j = 0; j < cups; ++j) f.word.push_back(E(2 * j + 1));
  // τ sends slot bottom_slot[q] to B_q, i.e. the inverse of bottom_slot.
  std::vector<int> tau(n);
  for (int q = 0; q < n; ++q) tau[bottom_slot[q]] = q;
  auto rest = permutation_word(tau);
  f.word.insert(f.word.end(), rest.begin(), rest.end());

  Matching acc = identity_diagram(n);
  for (const auto& s : f.word) {
    auto c = compose(acc, s.kind == GeneratorKind::E ? e_diagram(s.index, n) : v_diagram(s.index, n));
    acc = c.diagram;
    f.loops += c.loops;
  }
  if (!(acc == m)) throw std::logic_error("factorization of " + m.to_string() + " produced " + acc.to_string());
  return f;
}

DenseMatrix rep_element(const AlgebraElement& x, const RepConfig& cfg) {
  cfg.validate();
  if (x.strands() != cfg.n) {
    throw std::invalid_argument("element on " + std::to_string(x.strands()) + " strands, representation on " +
                                std::to_string(cfg.n));
  }
  const auto e = ptranspose_matrix(cfg.d);
  const auto v = perm_matrix(cfg.d);
  std::vector<DenseMatrix> es;
  std::vector<DenseMatrix> vs;
  for (int i = 1; i < cfg.n; ++i) {
    es.push_back(site_embed(e, i, cfg));
    vs.push_back(site_embed(v, i, cfg));
  }
  const QuadScalar lambda(static_cast<long>(cfg.d));
  DenseMatrix out(cfg.dimension(), cfg.dimension());
  for (const auto& [m, coefficient] : x.terms()) {
    const Factorization f = factorize(m);
    DenseMatrix image = DenseMatrix::identity(cfg.dimension());
    for (const auto& s : f.word) {
      image = image * (s.kind == GeneratorKind::E ? es[s.index - 1] : vs[s.index - 1]);
    }
    out = out + (coefficient / lambda.pow(static_cast<unsigned>(f.loops))) * image;
  }
  return out;
}

MatrixRep::MatrixRep(RepConfig cfg) : cfg_(cfg), e_(0, 0), v_(0, 0) {
  cfg_.validate();
  e_ = ptranspose_matrix(cfg_.d);
  v_ = perm_matrix(cfg_.d);
}

DenseMatrix MatrixRep::generator(GeneratorSymbol s, const RhoParams& params) const {
  switch (s.kind) {
    case GeneratorKind::E:
      return site_embed(e_, s.index, cfg_);
    case GeneratorKind::V:
      return site_embed(v_, s.index, cfg_);
    case GeneratorKind::Rho:
    case GeneratorKind::RhoInv: {
      const auto id = DenseMatrix::identity(e_.rows());
      const auto local = params.a * id + params.b * e_ + params.c * v_;
      if (s.kind == GeneratorKind::Rho) return site_embed(local, s.index, cfg_);
      auto inv = invert(local);
      if (!inv) throw NotInvertible("rho_" + std::to_string(s.index) + " is singular in the matrix model");
      return site_embed(*inv, s.index, cfg_);
    }
  }
  throw std::logic_error("unhandled generator kind");
}

double MatrixRep::max_magnitude(const Element& x) const {
  double best = 0;
  for (const auto& e : x.entries()) best = std::max(best, std::hypot(e.approx_real(), e.approx_imag()));
  return best;
}

std::vector<std::vector<QuadScalar>> MatrixRep::coordinates(const std::vector<Element>& xs) const {
  std::vector<std::vector<QuadScalar>> out;
  for (const auto& x : xs) out.push_back(x.entries());
  return out;
}

Json MatrixRep::witness(const Element& x) const {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x(r, c).is_zero()) continue;
      Json out = Json::object();
      out["row"] = r;
      out["col"] = c;
      out["value"] = vtl::to_json(x(r, c));
      out["text"] = "[" + std::to_string(r) + "," + std::to_string(c) + "] = " + x(r, c).to_string();
      return out;
    }
  }
  return nullptr;
}

}  // namespace vtl
