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


#include "vtl/sampling.hpp"

#include <numeric>
#include <vector>

namespace vtl {

Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Matching random_matching(Rng& rng, int n) {
  std::vector<int> free(2 * n);
  std::iota(free.begin(), free.end(), 0);
  std::vector<int> partners(2 * n, -1);
  while (!free.empty()) {
    const int p = free.front();
    free.erase(free.begin());
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    const auto k = pick(rng);
    const int q = free[k];
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(k));
    partners[p] = q;
    partners[q] = p;
  }
  return Matching(std::move(partners));
}

AlgebraElement random_element(Rng& rng, int n, int terms) {
  AlgebraElement x(n);
  for (int k = 0; k < terms; ++k) {
    Rational c = random_rational(rng);
    if (c == 0) c = 1;
    x = x + AlgebraElement(random_matching(rng, n), QuadScalar(c));
  }
  return x;
}

GeneratorWord random_word(Rng& rng, int n, int max_length) {
  GeneratorWord w{n, {}};
  if (n < 2) return w;
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution is_e(0.5);
  const int len = length(rng);
  for (int k = 0; k < len; ++k) {
    const int i = index(rng);
    w.symbols.push_back(is_e(rng) ? E(i) : V(i));
  }
  return w;
}

}  // namespace vtl
