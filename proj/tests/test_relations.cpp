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

using vtl::CheckReport;
using vtl::DiagramRep;
using vtl::Expectation;
using vtl::MatrixRep;
using vtl::QuadScalar;
using vtl::RhoParams;

namespace {

RhoParams random_params(vtl::Rng& rng, const QuadScalar& lambda) {
  return {vtl::random_rational(rng), vtl::random_rational(rng), vtl::random_rational(rng), lambda};
}

// Uniformly random rational moved away from zero.
QuadScalar shifted(vtl::Rng& rng, long by) { return QuadScalar(vtl::Rational(vtl::random_rational(rng) + by)); }

QuadScalar random_lambda(vtl::Rng& rng) {
  for (;;) {
    QuadScalar l = vtl::random_rational(rng);
    if (!(l * l == QuadScalar(4))) return l;
  }
}

template <vtl::Representation R>
void check_brauer_forms(const R& rep, const RhoParams& p) {
  for (const auto& f : vtl::relation_families()) {
    if (f.min_n > rep.strands()) continue;
    for (const auto& inst : vtl::relation_instances(f.name, rep.strands(), p)) {
      if (inst.brauer_form.empty()) continue;
      auto residual = rep.add(vtl::evaluate(inst.lhs, rep, p), rep.scale(-1, vtl::evaluate(inst.rhs, rep, p)));
      auto reduced = rep.zero();
      for (const auto& t : inst.brauer_form) reduced = rep.add(reduced, rep.scale(t.coefficient, vtl::evaluate(t.element, rep, p)));
      INFO(rep.name() << " " << inst.family << " site " << inst.site << ": " << inst.relation);
      CHECK(residual == reduced);
    }
  }
}

template <vtl::Representation R>
void check_identities(const R& rep, const RhoParams& p) {
  for (const auto& f : vtl::relation_families()) {
    if (f.min_n > rep.strands()) continue;
    for (const auto& inst : vtl::relation_instances(f.name, rep.strands(), p)) {
      if (inst.kind != vtl::InstanceKind::Identity) continue;
      const CheckReport r = vtl::check_relation(inst, rep, p);
      INFO(rep.name() << " n=" << rep.strands() << " " << inst.family << ": " << inst.relation);
      CHECK(r.expectation == Expectation::Holds);
      CHECK(r.residual_zero);
    }
  }
}

}  // namespace

TEST_CASE("stored Brauer-reduced forms equal the evaluated residuals") {
  vtl::Rng rng(43);
  for (int k = 0; k < 6; ++k) {
    const QuadScalar l = random_lambda(rng);
    for (int n : {3, 4}) check_brauer_forms(DiagramRep(n, l), random_params(rng, l));
    const RhoParams braid{1, vtl::solve_ab(l).plus, vtl::random_rational(rng), l};
    check_brauer_forms(DiagramRep(3, l), braid);
  }
  for (auto [n, d] : {std::pair{3, 2}, {3, 3}}) {
    const QuadScalar l(d);
    check_brauer_forms(MatrixRep({n, d}), random_params(rng, l));
    check_brauer_forms(MatrixRep({n, d}), RhoParams{1, vtl::solve_ab(l).minus, 1, l});
  }
}

TEST_CASE("identity relations hold in the diagram algebra for any parameters") {
  vtl::Rng rng(47);
  for (int n : {3, 4, 5}) {
    for (int k = 0; k < 5; ++k) {
      const QuadScalar l = vtl::random_rational(rng);
      check_identities(DiagramRep(n, l), random_params(rng, l));
    }
  }
  check_identities(DiagramRep(2, 3), RhoParams{1, 1, 1, 3});
}

TEST_CASE("identity relations hold in the matrix model") {
  vtl::Rng rng(53);
  for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {4, 2}}) check_identities(MatrixRep({n, d}), random_params(rng, d));
}

TEST_CASE("rho with b at a braid root satisfies the braid relations") {
  vtl::Rng rng(59);
  for (int k = 0; k < 4; ++k) {
    const QuadScalar l = random_lambda(rng);
    for (const auto& b : {vtl::solve_ab(l).plus, vtl::solve_ab(l).minus}) {
      const RhoParams p{1, b, 0, l};
      for (int n : {3, 4}) {
        for (const auto& inst : vtl::relation_instances("BGR", n, p)) {
          const auto r = vtl::check_relation(inst, DiagramRep(n, l), p);
          CHECK(r.residual_zero);
          CHECK(r.expectation == Expectation::Holds);
        }
      }
    }
  }
}

TEST_CASE("wTL relations at lambda = 2 with a = -b hold for any c") {
  vtl::Rng rng(61);
  for (int k = 0; k < 6; ++k) {
    const QuadScalar a = shifted(rng, 10);  // keep b = −a nonzero
    const RhoParams p{a, -a, vtl::random_rational(rng), 2};
    for (const char* fam : {"wTL1", "wTL2"}) {
      const auto r = vtl::check_relation(vtl::relation_instances(fam, 3, p)[0], DiagramRep(3, 2), p);
      INFO(fam);
      CHECK(r.residual_zero);
      CHECK(r.expectation == Expectation::Holds);
    }
  }
}

TEST_CASE("wTL relations away from lambda = 2 are nonzero") {
  const QuadScalar l = 3;
  const RhoParams p{1, vtl::solve_ab(l).plus, 1, l};
  const DiagramRep rep(3, l);
  for (const char* fam : {"wTL1", "wTL2"}) {
    const auto r = vtl::check_relation(vtl::relation_instances(fam, 3, p)[0], rep, p);
    INFO(fam);
    CHECK_FALSE(r.residual_zero);
    CHECK(r.expectation == Expectation::Nonzero);
    CHECK(r.negative_control());
    CHECK_FALSE(r.failed());
    CHECK_FALSE(r.witness.is_null());
    CHECK_FALSE(r.groups.empty());
  }
  vtl::Rng rng(67);
  for (int k = 0; k < 5; ++k) {
    const QuadScalar lk = random_lambda(rng);
    const RhoParams pk{1, vtl::solve_ab(lk).plus, shifted(rng, 20), lk};
    const auto r = vtl::check_relation(vtl::relation_instances("wTL1", 3, pk)[0], DiagramRep(3, lk), pk);
    CHECK_FALSE(r.residual_zero);
  }
}

TEST_CASE("vTL vanishes exactly when its reduced coefficients do") {
  vtl::Rng rng(71);
  for (int k = 0; k < 8; ++k) {
    const QuadScalar l = random_lambda(rng);
    const DiagramRep rep(3, l);
    // Coefficient conditions met: c = 0 and b a braid root.
    const RhoParams good{1, k % 2 ? vtl::solve_ab(l).plus : vtl::solve_ab(l).minus, 0, l};
    const auto inst_good = vtl::relation_instances("vTL", 3, good)[0];
    CHECK(vtl::detail::all_coefficients_zero(inst_good));
    CHECK(vtl::check_relation(inst_good, rep, good).residual_zero);
    // Generic parameters: some coefficient is nonzero, and so is the residual.
    const RhoParams bad = random_params(rng, l);
    const auto inst_bad = vtl::relation_instances("vTL", 3, bad)[0];
    if (vtl::detail::all_coefficients_zero(inst_bad)) continue;
    const auto r = vtl::check_relation(inst_bad, rep, bad);
    REQUIRE(r.brauer_groups_independent.has_value());
    if (*r.brauer_groups_independent) CHECK_FALSE(r.residual_zero);
  }
}

TEST_CASE("the four reduced groups are independent in D_3 and D_4") {
  vtl::Rng rng(73);
  for (int n : {3, 4}) {
    for (int k = 0; k < 4; ++k) {
      const QuadScalar l = vtl::random_rational(rng);
      const RhoParams p{1, 1, 1, l};
      const auto r = vtl::check_relation(vtl::relation_instances("brvtl", n, p)[0], DiagramRep(n, l), p);
      CHECK(r.brauer_groups_independent == true);
    }
  }
  // In the d = 2 operator model they satisfy one linear relation.
  const RhoParams p{1, 1, 1, 2};
  const auto r = vtl::check_relation(vtl::relation_instances("brvtl", 3, p)[0], MatrixRep({3, 2}), p);
  CHECK(r.brauer_groups_independent == false);
}

TEST_CASE("the [F]_j groups are nonzero in the Brauer algebra") {
  vtl::Rng rng(79);
  for (int k = 0; k < 5; ++k) {
    const QuadScalar l = vtl::random_rational(rng);
    const DiagramRep rep(3, l);
    for (const auto& g : {vtl::groups::f0(1), vtl::groups::f1(1), vtl::groups::f2(1)}) {
      CHECK_FALSE(vtl::evaluate(g, rep, RhoParams{}).is_zero());
    }
  }
}

TEST_CASE("forbidden moves in the d = 2 operator model") {
  const MatrixRep rep({3, 2});
  vtl::Rng rng(83);
  for (int k = 0; k < 3; ++k) {
    const QuadScalar a = shifted(rng, 10);
    const RhoParams p{a, -a, vtl::random_rational(rng), 2};
    for (const char* fam : {"F1", "F2", "FF1", "FF2", "<F1>", "<F2>", "fu22", "wTL1", "wTL2"}) {
      for (const auto& inst : vtl::relation_instances(fam, 3, p)) {
        const auto r = vtl::check_relation(inst, rep, p);
        INFO(fam << ": " << inst.relation);
        CHECK(r.residual_zero);
        CHECK(r.expectation == Expectation::Holds);
      }
    }
  }
}

TEST_CASE("the E* forbidden moves do not hold in the diagram algebra") {
  const RhoParams p{1, -1, 0, 2};
  for (const char* fam : {"<F1>", "<F2>", "fu22"}) {
    for (const auto& inst : vtl::relation_instances(fam, 3, p)) {
      const auto r = vtl::check_relation(inst, DiagramRep(3, 2), p);
      INFO(fam << ": " << inst.relation);
      CHECK_FALSE(r.residual_zero);
      CHECK(r.residual_terms == 8);
      CHECK(r.expectation == Expectation::Nonzero);
    }
  }
}

TEST_CASE("check_relation reports") {
  const RhoParams p{1, vtl::solve_ab(3).plus, 0, 3};
  const auto vev = vtl::relation_instances("VEV", 3, p);
  const auto r = vtl::check_relation(vev[0], DiagramRep(3, 3), p);
  CHECK(r.residual_zero);
  CHECK(r.witness.is_null());
  CHECK(r.residual_terms == 0);
  const auto j = vtl::to_json(r);
  CHECK(j["family"] == "VEV");
  CHECK(j["residual_zero"] == true);
  CHECK(j["params"]["b"]["D_num"] == 5);
  CHECK(j["params"]["D"]["D_num"] == 5);
}

TEST_CASE("b = 0 is reported as degenerate") {
  const RhoParams p{1, 0, 1, 2};
  const auto r = vtl::check_relation(vtl::relation_instances("vTL", 3, p)[0], DiagramRep(3, 2), p);
  CHECK(r.status == vtl::CheckStatus::Degenerate);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(r.note.empty());
  // Relations that do not come from the ρ ansatz are still evaluated.
  CHECK(vtl::check_relation(vtl::relation_instances("VBR", 3, p)[0], DiagramRep(3, 2), p).status ==
        vtl::CheckStatus::Checked);
}

TEST_CASE("check_relation validates its inputs") {
  const RhoParams p{1, -1, 0, 2};
  const auto inst = vtl::relation_instances("TLR", 4, p);
  CHECK_THROWS_AS(vtl::check_relation(inst.back(), DiagramRep(3, 2), p), std::out_of_range);
  CHECK_THROWS_AS(vtl::check_relation(inst.front(), DiagramRep(4, 3), p), std::invalid_argument);
  CHECK_THROWS_AS(vtl::check_relation(inst.front(), MatrixRep({4, 3}), p), std::invalid_argument);
}
