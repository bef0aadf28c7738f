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

#include <numeric>

#include "vtl/matching.hpp"
#include "vtl/sampling.hpp"

using vtl::compose;
using vtl::e_diagram;
using vtl::Endpoint;
using vtl::identity_diagram;
using vtl::Matching;
using vtl::v_diagram;

namespace {

Matching from_labels(int n, std::vector<std::pair<std::string, std::string>> pairs) {
  std::vector<Matching::Pair> out;
  for (auto& [p, q] : pairs) out.push_back({Endpoint::parse(p), Endpoint::parse(q)});
  return Matching::from_pairs(n, out);
}

// Union-find over the 3n points of the stacked picture: upper tops (0..n-1),
// the glued layer (n..2n-1), lower bottoms (2n..3n-1).
struct Stacked {
  std::vector<int> parent;
  explicit Stacked(int points) : parent(points) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int x, int y) { parent[find(x)] = find(y); }
};

vtl::Composite oracle_compose(const Matching& upper, const Matching& lower) {
  const int n = upper.strands();
  Stacked s(3 * n);
  for (int p = 0; p < 2 * n; ++p) s.join(p, upper.partner(p));            // upper: tops 0..n-1, bottoms n..2n-1
  for (int p = 0; p < 2 * n; ++p) s.join(p + n, lower.partner(p) + n);    // lower: tops n..2n-1, bottoms 2n..3n-1
  std::vector<int> boundary;
  for (int p = 0; p < n; ++p) boundary.push_back(p);
  for (int p = 2 * n; p < 3 * n; ++p) boundary.push_back(p);
  std::vector<int> partners(2 * n, -1);
  for (std::size_t x = 0; x < boundary.size(); ++x) {
    for (std::size_t y = 0; y < boundary.size(); ++y) {
      if (x != y && s.find(boundary[x]) == s.find(boundary[y])) partners[x] = static_cast<int>(y);
    }
  }
  std::vector<int> roots;
  for (int p = n; p < 2 * n; ++p) roots.push_back(s.find(p));
  for (int b : boundary) std::erase(roots, s.find(b));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return {Matching(partners), static_cast<int>(roots.size())};
}

}  // namespace

TEST_CASE("generator diagrams") {
  CHECK(identity_diagram(2).to_string() == "{(T1,B1),(T2,B2)}");
  CHECK(identity_diagram(1).to_string() == "{(T1,B1)}");
  CHECK(e_diagram(1, 2).to_string() == "{(T1,T2),(B1,B2)}");
  CHECK(e_diagram(2, 3).to_string() == "{(T1,B1),(T2,T3),(B2,B3)}");
  CHECK(v_diagram(1, 2).to_string() == "{(T1,B2),(T2,B1)}");
  CHECK(e_diagram(2, 3) == from_labels(3, {{"B3", "B2"}, {"T1", "B1"}, {"T3", "T2"}}));
  CHECK_THROWS_AS(e_diagram(0, 3), std::out_of_range);
  CHECK_THROWS_AS(e_diagram(3, 3), std::out_of_range);
  CHECK_THROWS_AS(v_diagram(1, 1), std::out_of_range);
}

TEST_CASE("matchings reject malformed input") {
  CHECK_THROWS_AS(Matching({1, 0, 2, 3}), std::invalid_argument);  // fixed points
  CHECK_THROWS_AS(Matching({1, 2, 0, 3}), std::invalid_argument);  // not an involution
  CHECK_THROWS_AS(Matching({1, 0, 3}), std::invalid_argument);     // odd point count
  CHECK_THROWS_AS(from_labels(2, {{"T1", "T2"}, {"T1", "B1"}}), std::invalid_argument);
  CHECK_THROWS_AS(Endpoint::parse("X1"), std::invalid_argument);
  CHECK_THROWS_AS(Endpoint::parse("T0"), std::invalid_argument);
}

TEST_CASE("pairs are canonical") {
  const auto pairs = v_diagram(1, 3).pairs();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].first.label() == "T1");
  CHECK(pairs[0].second.label() == "B2");
  CHECK(pairs[2].first.label() == "T3");
  CHECK(e_diagram(1, 3).through_strands() == 1);
  CHECK(v_diagram(2, 4).is_permutation());
  CHECK(v_diagram(1, 2).flipped() == v_diagram(1, 2));
}

TEST_CASE("composition of generator diagrams") {
  const auto ee = compose(e_diagram(1, 2), e_diagram(1, 2));
  CHECK(ee.diagram == e_diagram(1, 2));
  CHECK(ee.loops == 1);

  const auto vv = compose(v_diagram(1, 2), v_diagram(1, 2));
  CHECK(vv.diagram == identity_diagram(2));
  CHECK(vv.loops == 0);

  const auto e1e2 = compose(e_diagram(1, 3), e_diagram(2, 3));
  const auto e1e2e1 = compose(e1e2.diagram, e_diagram(1, 3));
  CHECK(e1e2e1.diagram == e_diagram(1, 3));
  CHECK(e1e2.loops + e1e2e1.loops == 0);

  const auto ve = compose(v_diagram(1, 2), e_diagram(1, 2));
  CHECK(ve.diagram == e_diagram(1, 2));
  CHECK(ve.loops == 0);

  auto chain = [](std::vector<Matching> ms) {
    Matching acc = ms.front();
    for (std::size_t k = 1; k < ms.size(); ++k) acc = compose(acc, ms[k]).diagram;
    return acc;
  };
  CHECK(chain({v_diagram(1, 3), v_diagram(2, 3), v_diagram(1, 3)}) ==
        chain({v_diagram(2, 3), v_diagram(1, 3), v_diagram(2, 3)}));
  CHECK_THROWS_AS(compose(e_diagram(1, 2), e_diagram(1, 3)), std::invalid_argument);
}

TEST_CASE("identity is a two-sided unit") {
  vtl::Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto m = vtl::random_matching(rng, 3);
    CHECK(compose(identity_diagram(3), m).diagram == m);
    CHECK(compose(identity_diagram(3), m).loops == 0);
    CHECK(compose(m, identity_diagram(3)).diagram == m);
  }
}

TEST_CASE("composition agrees with a union-find tracing oracle") {
  vtl::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + k % 5;
    const auto x = vtl::random_matching(rng, n);
    const auto y = vtl::random_matching(rng, n);
    const auto got = compose(x, y);
    const auto want = oracle_compose(x, y);
    INFO(x.to_string() << " * " << y.to_string());
    CHECK(got.diagram == want.diagram);
    CHECK(got.loops == want.loops);
    CHECK(got.loops >= 0);
    CHECK(got.loops <= n);
  }
}

TEST_CASE("composition is associative with additive loop counts") {
  vtl::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 5;
    const auto x = vtl::random_matching(rng, n);
    const auto y = vtl::random_matching(rng, n);
    const auto z = vtl::random_matching(rng, n);
    const auto xy = compose(x, y);
    const auto xy_z = compose(xy.diagram, z);
    const auto yz = compose(y, z);
    const auto x_yz = compose(x, yz.diagram);
    CHECK(xy_z.diagram == x_yz.diagram);
    CHECK(xy.loops + xy_z.loops == yz.loops + x_yz.loops);
  }
}

TEST_CASE("closure loops") {
  CHECK(vtl::closure_loops(identity_diagram(3)) == 3);
  CHECK(vtl::closure_loops(e_diagram(1, 2)) == 1);
  CHECK(vtl::closure_loops(v_diagram(1, 2)) == 1);
  CHECK(vtl::closure_loops(e_diagram(1, 3)) == 2);
}

TEST_CASE("random matchings are uniform over all perfect matchings") {
  vtl::Rng rng(3);
  std::map<Matching, int> seen;
  for (int k = 0; k < 3000; ++k) ++seen[vtl::random_matching(rng, 2)];
  REQUIRE(seen.size() == 3);  // (2·2 − 1)!! = 3
  for (const auto& [m, count] : seen) CHECK(count > 800);
}
