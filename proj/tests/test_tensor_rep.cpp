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


#include <catch_amalgamated.hpp>

#include "vtl/check.hpp"
#include "vtl/diagram_rep.hpp"
#include "vtl/relations.hpp"
#include "vtl/sampling.hpp"
#include "vtl/tensor_rep.hpp"

using vtl::DenseMatrix;
using vtl::QuadScalar;
using vtl::RepConfig;

namespace {

// Entry (row, col) is 1 when the basis labels of the top points (row) and
// bottom points (col) agree along every arc of the diagram.
DenseMatrix contraction(const vtl::Matching& m, int d) {
  const int n = m.strands();
  const RepConfig cfg{n, d};
  const std::size_t dim = cfg.dimension();
  DenseMatrix out(dim, dim);
  std::vector<int> labels(2 * n);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::size_t rr = r, cc = c;
      for (int k = n - 1; k >= 0; --k) {
        labels[k] = static_cast<int>(rr % d);
        labels[n + k] = static_cast<int>(cc % d);
        rr /= d;
        cc /= d;
      }
      bool ok = true;
      for (int p = 0; p < 2 * n && ok; ++p) ok = labels[p] == labels[m.partner(p)];
      if (ok) out.at(r, c) = 1;
    }
  }
  return out;
}

DenseMatrix contraction(const vtl::AlgebraElement& x, int d) {
  const std::size_t dim = RepConfig{x.strands(), d}.dimension();
  DenseMatrix out(dim, dim);
  for (const auto& [m, c] : x.terms()) out = out + c * contraction(m, d);
  return out;
}

DenseMatrix basis_vector(std::size_t dim, std::size_t k) {
  DenseMatrix v(dim, 1);
  v.at(k, 0) = 1;
  return v;
}

}  // namespace

TEST_CASE("permutation operator") {
  const auto p = vtl::perm_matrix(2);
  // |01> = index 1, |10> = index 2.
  CHECK(p * basis_vector(4, 0) == basis_vector(4, 0));
  CHECK(p * basis_vector(4, 3) == basis_vector(4, 3));
  CHECK(p * basis_vector(4, 1) == basis_vector(4, 2));
  CHECK(p * basis_vector(4, 2) == basis_vector(4, 1));
  for (int d : {2, 3, 4}) {
    const auto pd = vtl::perm_matrix(d);
    CHECK(pd * pd == DenseMatrix::identity(d * d));
    CHECK(pd.trace() == QuadScalar(d));
    CHECK(vtl::invert(pd) == pd);
  }
  CHECK_THROWS_AS(vtl::perm_matrix(1), std::invalid_argument);
}

TEST_CASE("partial transpose of the permutation") {
  const auto ps = vtl::ptranspose_matrix(2);
  CHECK(ps * basis_vector(4, 0) == basis_vector(4, 0) + basis_vector(4, 3));
  CHECK((ps * basis_vector(4, 1)).is_zero());
  CHECK_FALSE(vtl::invert(ps).has_value());
  CHECK(vtl::rank(ps) == 1);
  for (int d : {2, 3, 4}) {
    const auto p = vtl::perm_matrix(d);
    const auto s = vtl::ptranspose_matrix(d);
    CHECK(s * s == QuadScalar(d) * s);
    CHECK(p * s == s);
    CHECK(s * p == s);
    CHECK(s.transpose() == s);
    CHECK(vtl::partial_transpose_second(p, d) == s);
    CHECK(vtl::partial_transpose_second(s, d) == p);
  }
}

TEST_CASE("site embedding") {
  const auto p = vtl::perm_matrix(2);
  const auto s = vtl::ptranspose_matrix(2);
  CHECK(vtl::site_embed(p, 1, {2, 2}) == p);
  const RepConfig c3{3, 2};
  const auto e1 = vtl::site_embed(s, 1, c3);
  const auto e2 = vtl::site_embed(s, 2, c3);
  CHECK(e1 * e2 * e1 == e1);
  CHECK(e2 * e1 * e2 == e2);
  CHECK(vtl::site_embed(p, 1, c3) == vtl::kron(p, DenseMatrix::identity(2)));
  CHECK(vtl::site_embed(p, 2, c3) == vtl::kron(DenseMatrix::identity(2), p));
  CHECK_THROWS_AS(vtl::site_embed(p, 3, c3), std::out_of_range);
  CHECK_THROWS_AS(vtl::site_embed(vtl::perm_matrix(3), 1, c3), std::invalid_argument);
  CHECK_THROWS_AS(vtl::site_embed(p, 1, {9, 2}), std::invalid_argument);
}

TEST_CASE("the vee identity") {
  for (int d : {2, 3}) {
    const RepConfig c{3, d};
    const auto e1 = vtl::site_embed(vtl::ptranspose_matrix(d), 1, c);
    const auto e2 = vtl::site_embed(vtl::ptranspose_matrix(d), 2, c);
    const auto p_id = vtl::kron(vtl::perm_matrix(d), DenseMatrix::identity(d));
    const auto id_p = vtl::kron(DenseMatrix::identity(d), vtl::perm_matrix(d));
    CHECK(p_id * e2 * e1 == id_p * e1);
  }
}

TEST_CASE("complement of the partial transpose at d = 2") {
  const auto q = vtl::pstar_complement({2, 2});
  CHECK(q * basis_vector(4, 1) == basis_vector(4, 1));
  CHECK(q * basis_vector(4, 0) == QuadScalar(-1) * basis_vector(4, 3));
  CHECK(q * q == DenseMatrix::identity(4));
  CHECK_THROWS_AS(vtl::pstar_complement({2, 3}), std::invalid_argument);

  const RepConfig c{3, 2};
  const auto p1 = vtl::site_embed(vtl::perm_matrix(2), 1, c);
  const auto p2 = vtl::site_embed(vtl::perm_matrix(2), 2, c);
  const auto q1 = vtl::site_embed(q, 1, c);
  const auto q2 = vtl::site_embed(q, 2, c);
  CHECK(p1 * q2 * q1 == q2 * q1 * p2);
  CHECK(q1 * q2 * p1 == p2 * q1 * q2);
}

TEST_CASE("the E* forbidden moves fail at d = 3") {
  const RepConfig c{3, 3};
  const auto id = DenseMatrix::identity(9);
  const auto q1 = vtl::site_embed(id - vtl::ptranspose_matrix(3), 1, c);
  const auto q2 = vtl::site_embed(id - vtl::ptranspose_matrix(3), 2, c);
  const auto p1 = vtl::site_embed(vtl::perm_matrix(3), 1, c);
  const auto p2 = vtl::site_embed(vtl::perm_matrix(3), 2, c);
  CHECK_FALSE((p1 * q2 * q1 - q2 * q1 * p2).is_zero());
  CHECK_FALSE((q1 * q2 * p1 - p2 * q1 * q2).is_zero());
}

TEST_CASE("inversion") {
  const QuadScalar b = vtl::solve_ab(3).plus;
  const auto rho = DenseMatrix::identity(9) + b * vtl::ptranspose_matrix(3);
  const auto inv = vtl::invert(rho);
  REQUIRE(inv.has_value());
  CHECK(*inv * rho == DenseMatrix::identity(9));
  CHECK(rho * *inv == DenseMatrix::identity(9));
  CHECK_THROWS_AS(vtl::invert(DenseMatrix(2, 3)), std::invalid_argument);
  vtl::Rng rng(103);
  for (int k = 0; k < 20; ++k) {
    DenseMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t cc = 0; cc < 4; ++cc) m.at(r, cc) = vtl::random_rational(rng, 3, 2);
    }
    if (auto mi = vtl::invert(m)) {
      CHECK(*mi * m == DenseMatrix::identity(4));
    } else {
      CHECK(vtl::rank(m) < 4);
    }
  }
}

TEST_CASE("factorization reproduces every diagram") {
  vtl::Rng rng(107);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 5;
    const auto m = vtl::random_matching(rng, n);
    const auto f = vtl::factorize(m);
    vtl::Composite acc{vtl::identity_diagram(n), 0};
    for (const auto& s : f.word) {
      const auto g = s.kind == vtl::GeneratorKind::E ? vtl::e_diagram(s.index, n) : vtl::v_diagram(s.index, n);
      const auto next = vtl::compose(acc.diagram, g);
      acc = {next.diagram, acc.loops + next.loops};
    }
    CHECK(acc.diagram == m);
    CHECK(acc.loops == f.loops);
  }
}

TEST_CASE("images of diagrams agree with direct index contraction") {
  vtl::Rng rng(109);
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    for (int k = 0; k < 15; ++k) {
      const auto m = vtl::random_matching(rng, n);
      INFO(m.to_string() << " d=" << d);
      CHECK(vtl::rep_element(vtl::AlgebraElement(m), {n, d}) == contraction(m, d));
    }
  }
  CHECK(vtl::rep_element(vtl::AlgebraElement(vtl::e_diagram(1, 2)), {2, 2}) == vtl::ptranspose_matrix(2));
  CHECK_THROWS_AS(vtl::rep_element(vtl::AlgebraElement(vtl::e_diagram(1, 2)), {3, 2}), std::invalid_argument);
}

TEST_CASE("the matrix image is multiplicative") {
  vtl::Rng rng(113);
  const vtl::RhoParams none{};
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 3;
    const vtl::DiagramRep diagrams(n, 2);
    const RepConfig cfg{n, 2};
    const auto x = vtl::evaluate_word(vtl::random_word(rng, n, 8), diagrams, none);
    const auto y = vtl::evaluate_word(vtl::random_word(rng, n, 8), diagrams, none);
    CHECK(vtl::rep_element(diagrams.multiply(x, y), cfg) == vtl::rep_element(x, cfg) * vtl::rep_element(y, cfg));
    CHECK(contraction(x, 2) == vtl::rep_element(x, cfg));
  }
}

TEST_CASE("rho in the matrix model") {
  const vtl::RhoParams p{1, vtl::solve_ab(2).plus, 0, 2};
  const vtl::MatrixRep rep({2, 2});
  CHECK(rep.generator(vtl::Rho(1), p) == DenseMatrix::identity(4) - vtl::ptranspose_matrix(2));
  CHECK(vtl::rep_element(vtl::rho_element(1, 2, p), {2, 2}) == rep.generator(vtl::Rho(1), p));
  for (int d : {2, 3}) {
    const QuadScalar l(d);
    for (const auto& b : {vtl::solve_ab(l).plus, vtl::solve_ab(l).minus}) {
      const vtl::RhoParams pb{1, b, 0, l};
      const vtl::MatrixRep r3({3, d});
      for (const auto& inst : vtl::relation_instances("BGR", 3, pb)) CHECK(vtl::check_relation(inst, r3, pb).residual_zero);
      const auto rho = r3.generator(vtl::Rho(1), pb);
      CHECK(rho * r3.generator(vtl::RhoInv(1), pb) == r3.identity());
    }
  }
  CHECK_THROWS_AS(rep.generator(vtl::RhoInv(1), {1, 0, 1, 2}), vtl::NotInvertible);
}

TEST_CASE("defining relations of vTL hold in the matrix model") {
  for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    const QuadScalar l(d);
    const vtl::RhoParams p{1, vtl::solve_ab(l).plus, 0, l};
    const vtl::MatrixRep rep({n, d});
    for (const char* fam : {"TLR", "VCR", "VEV", "vTL", "brauer", "brauer.F", "conj"}) {
      for (const auto& inst : vtl::relation_instances(fam, n, p)) {
        INFO(fam << " n=" << n << " d=" << d << ": " << inst.relation);
        CHECK(vtl::check_relation(inst, rep, p).residual_zero);
      }
    }
  }
}

TEST_CASE("matrix configuration limits") {
  CHECK_THROWS_AS(vtl::MatrixRep({5, 4}), std::invalid_argument);
  CHECK_NOTHROW(vtl::MatrixRep({4, 4}));
  CHECK_THROWS_AS(vtl::MatrixRep({3, 1}), std::invalid_argument);
}
