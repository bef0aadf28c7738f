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

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vtl {

/// A boundary point of an n-strand diagram: T1..Tn on top, B1..Bn below.
struct Endpoint {
  enum class Side { Top, Bottom };
  Side side = Side::Top;
  int position = 1;  // 1-based

  std::string label() const;
  static Endpoint parse(std::string_view label);

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A Brauer diagram: a perfect matching on the 2n boundary points.
///
/// Endpoints are ordered T1 < ... < Tn < B1 < ... < Bn. Internally point
/// k < n is T(k+1) and point n+k is B(k+1); the matching is stored as the
/// partner of every point, which is already canonical.
class Matching {
 public:
  using Pair = std::pair<Endpoint, Endpoint>;

  /// Validates that `partners` is a fixed-point-free involution.
  explicit Matching(std::vector<int> partners);
  static Matching from_pairs(int n, const std::vector<Pair>& pairs);

  int strands() const { return static_cast<int>(partners_.size() / 2); }
  int partner(int point) const { return partners_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& partners() const { return partners_; }

  /// Pairs with the smaller endpoint first, sorted.
  std::vector<Pair> pairs() const;
  int through_strands() const;
  bool is_permutation() const { return through_strands() == strands(); }
  /// Mirror image top <-> bottom.
  Matching flipped() const;

  std::string to_string() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partners_;
};

Matching identity_diagram(int n);
/// Cup-cap at (i, i+1); throws std::out_of_range unless 1 <= i <= n-1.
Matching e_diagram(int i, int n);
/// Crossing of strands i and i+1.
Matching v_diagram(int i, int n);

struct Composite {
  Matching diagram;
  int loops = 0;
};

/// Stacks `upper` on top of `lower`: upper's B_k is glued to lower's T_k.
/// Closed components lying entirely in the glued layer are counted as loops.
Composite compose(const Matching& upper, const Matching& lower);

/// Number of closed curves after joining T_k to B_k for every k.
int closure_loops(const Matching& m);

}  // namespace vtl
