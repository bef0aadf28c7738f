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

#include "vtl/matching.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vtl {

namespace {

int encode(const Endpoint& e, int n) {
  if (e.position < 1 || e.position > n) {
    throw std::out_of_range("endpoint " + e.label() + " outside 1.." + std::to_string(n));
  }
  return e.side == Endpoint::Side::Top ? e.position - 1 : n + e.position - 1;
}

Endpoint decode(int point, int n) {
  if (point < n) return {Endpoint::Side::Top, point + 1};
  return {Endpoint::Side::Bottom, point - n + 1};
}

void check_site(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n - 1));
  }
}

}  // namespace

std::string Endpoint::label() const {
  return (side == Side::Top ? "T" : "B") + std::to_string(position);
}

Endpoint Endpoint::parse(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'T' && label[0] != 'B')) {
    throw std::invalid_argument("bad endpoint label '" + std::string(label) + "'");
  }
  int pos = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), pos);
  if (ec != std::errc() || ptr != label.data() + label.size() || pos < 1) {
    throw std::invalid_argument("bad endpoint label '" + std::string(label) + "'");
  }
  return {label[0] == 'T' ? Side::Top : Side::Bottom, pos};
}

Matching::Matching(std::vector<int> partners) : partners_(std::move(partners)) {
  const int size = static_cast<int>(partners_.size());
  if (size == 0 || size % 2 != 0) {
    throw std::invalid_argument("matching needs 2n endpoints with n >= 1");
  }
  for (int p = 0; p < size; ++p) {
    int q = partners_[p];
    if (q < 0 || q >= size || q == p || partners_[q] != p) {
      throw std::invalid_argument("not a perfect matching");
    }
  }
}

Matching Matching::from_pairs(int n, const std::vector<Pair>& pairs) {
  if (n < 1 || static_cast<int>(pairs.size()) != n) {
    throw std::invalid_argument("a matching on " + std::to_string(n) + " strands has " +
                                std::to_string(n) + " pairs");
  }
  std::vector<int> partners(static_cast<std::size_t>(2 * n), -1);
  for (const auto& [a, b] : pairs) {
    int p = encode(a, n);
    int q = encode(b, n);
    if (partners[p] != -1 || partners[q] != -1) {
      throw std::invalid_argument("endpoint used twice");
    }
    partners[p] = q;
    partners[q] = p;
  }
  return Matching(std::move(partners));
}

std::vector<Matching::Pair> Matching::pairs() const {
  const int n = strands();
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < 2 * n; ++p) {
    int q = partner(p);
    if (p < q) out.emplace_back(decode(p, n), decode(q, n));
  }
  return out;
}

int Matching::through_strands() const {
  const int n = strands();
  int count = 0;
  for (int p = 0; p < n; ++p) {
    if (partner(p) >= n) ++count;
  }
  return count;
}

Matching Matching::flipped() const {
  const int n = strands();
  std::vector<int> out(partners_.size());
  auto swap_side = [n](int p) { return p < n ? p + n : p - n; };
  for (int p = 0; p < 2 * n; ++p) {
    out[swap_side(p)] = swap_side(partner(p));
  }
  return Matching(std::move(out));
}

std::string Matching::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << "(" << a.label() << "," << b.label() << ")";
  }
  os << "}";
  return os.str();
}

Matching identity_diagram(int n) {
  if (n < 1) throw std::invalid_argument("identity_diagram needs n >= 1");
  std::vector<int> partners(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    partners[k] = n + k;
    partners[n + k] = k;
  }
  return Matching(std::move(partners));
}

Matching e_diagram(int i, int n) {
  check_site(i, n);
  std::vector<int> partners = identity_diagram(n).partners();
  const int t = i - 1;
  partners[t] = t + 1;
  partners[t + 1] = t;
  partners[n + t] = n + t + 1;
  partners[n + t + 1] = n + t;
  return Matching(std::move(partners));
}

Matching v_diagram(int i, int n) {
  check_site(i, n);
  std::vector<int> partners = identity_diagram(n).partners();
  const int t = i - 1;
  partners[t] = n + t + 1;
  partners[n + t + 1] = t;
  partners[t + 1] = n + t;
  partners[n + t] = t + 1;
  return Matching(std::move(partners));
}

Composite compose(const Matching& upper, const Matching& lower) {
  const int n = upper.strands();
  if (lower.strands() != n) {
    throw std::invalid_argument("compose: strand counts " + std::to_string(n) + " and " +
                                std::to_string(lower.strands()) + " differ");
  }
  // Result points: upper tops keep 0..n-1, lower bottoms keep n..2n-1.
  // Middle point k is upper's B(k+1) == lower's T(k+1).
  std::vector<char> middle_seen(static_cast<std::size_t>(n), 0);
  std::vector<int> result(static_cast<std::size_t>(2 * n), -1);

  // Follows a strand entering the diagram `in_upper` at `point` until it
  // reaches the outer boundary; returns the result-point it lands on.
  auto walk = [&](bool in_upper, int point) {
    for (;;) {
      int q = in_upper ? upper.partner(point) : lower.partner(point);
      if (in_upper && q < n) return q;
      if (!in_upper && q >= n) return q;
      int mid = in_upper ? q - n : q;
      middle_seen[mid] = 1;
      in_upper = !in_upper;
      point = in_upper ? mid + n : mid;
    }
  };

  for (int p = 0; p < n; ++p) {
    if (result[p] != -1) continue;
    int q = walk(true, p);
    result[p] = q;
    result[q] = p;
  }
  for (int p = n; p < 2 * n; ++p) {
    if (result[p] != -1) continue;
    int q = walk(false, p);
    result[p] = q;
    result[q] = p;
  }

  int loops = 0;
  for (int start = 0; start < n; ++start) {
    if (middle_seen[start]) continue;
    ++loops;
    // Alternate lower/upper arcs until the cycle closes.
    int mid = start;
    bool in_lower = true;
    do {
      middle_seen[mid] = 1;
      if (in_lower) {
        mid = lower.partner(mid);  // another lower top
      } else {
        mid = upper.partner(mid + n) - n;  // another upper bottom
      }
      in_lower = !in_lower;
    } while (mid != start || !in_lower);
  }
  return {Matching(std::move(result)), loops};
}

int closure_loops(const Matching& m) {
  const int n = m.strands();
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int p) {
    while (parent[p] != p) {
      parent[p] = parent[parent[p]];
      p = parent[p];
    }
    return p;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int p = 0; p < 2 * n; ++p) unite(p, m.partner(p));
  for (int k = 0; k < n; ++k) unite(k, n + k);
  int components = 0;
  for (int p = 0; p < 2 * n; ++p) {
    if (find(p) == p) ++components;
  }
  return components;
}

}  // namespace vtl
