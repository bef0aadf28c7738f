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


#include "vtl/rewriting.hpp"

#include <array>
#include <stdexcept>

#include "vtl/dense_matrix.hpp"

namespace vtl {

namespace {

struct Rule {
  std::string_view from;
  std::string_view to;
  bool loop;  // contributes a factor λ
};

constexpr std::array<Rule, 10> kRules{{
    {"EE", "E", true},
    {"FF", "F", true},
    {"vv", "", false},
    {"ww", "", false},
    {"EFE", "E", false},
    {"FEF", "F", false},
    {"wvw", "vwv", false},
    {"wEw", "vFv", false},
    {"Ewv", "wvF", false},
    {"vwE", "Fvw", false},
}};

FreePoly constant(const QuadScalar& s) {
  FreePoly p;
  if (!s.is_zero()) p[""] = s;
  return p;
}

void accumulate(FreePoly& into, const std::string& word, const QuadScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

FreePoly add(const FreePoly& x, const FreePoly& y, const QuadScalar& scale = 1) {
  FreePoly out = x;
  for (const auto& [w, c] : y) accumulate(out, w, scale * c);
  return out;
}

FreePoly multiply(const FreePoly& x, const FreePoly& y) {
  FreePoly out;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) accumulate(out, wx + wy, cx * cy);
  }
  return out;
}

char letter(const GeneratorSymbol& s, int site) {
  if (s.index == site) return s.kind == GeneratorKind::E ? 'E' : 'v';
  if (s.index == site + 1) return s.kind == GeneratorKind::E ? 'F' : 'w';
  throw std::invalid_argument("generator " + s.to_string() + " is not at site " + std::to_string(site) + " or " +
                              std::to_string(site + 1));
}

// Solves Σ_j k_j columns[j] = target exactly; nullopt if inconsistent.
std::optional<std::vector<QuadScalar>> solve(const std::vector<FreePoly>& columns, const FreePoly& target) {
  std::map<std::string, std::size_t> row_of;
  for (const auto& col : columns) {
    for (const auto& [w, c] : col) row_of.try_emplace(w, row_of.size());
  }
  for (const auto& [w, c] : target) row_of.try_emplace(w, row_of.size());
  const std::size_t rows = row_of.size();
  const std::size_t cols = columns.size();
  DenseMatrix m(rows, cols + 1);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [w, c] : columns[j]) m.at(row_of[w], j) = c;
  }
  for (const auto& [w, c] : target) m.at(row_of[w], cols) = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && m(p, j).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k <= cols; ++k) std::swap(m.at(p, k), m.at(r, k));
    const QuadScalar inv = m(r, j).inverse();
    for (std::size_t k = 0; k <= cols; ++k) m.at(r, k) *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m(q, j).is_zero()) continue;
      const QuadScalar f = m(q, j);
      for (std::size_t k = 0; k <= cols; ++k) m.at(q, k) -= f * m(r, k);
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (!m(q, cols).is_zero()) return std::nullopt;
  }
  std::vector<QuadScalar> k(cols);
  for (std::size_t q = 0; q < pivot_col.size(); ++q) k[pivot_col[q]] = m(q, cols);
  return k;
}

struct Source {
  Expr brute;
  std::vector<Expr> groups;
};

Source source_for(std::string_view family, int i) {
  using namespace groups;
  if (family == "vTL") {
    return {rho(i) * rho(i + 1) * rho(i) - rho(i + 1) * rho(i) * rho(i + 1),
            {e_diff(i), v_diff(i),
             e(i) * v(i) + v(i) * e(i) - e(i + 1) * v(i + 1) - v(i + 1) * e(i + 1),
             f0(i) + f1(i) + f2(i)}};
  }
  if (family == "FF1") {
    return {v(i) * rho(i + 1) * rho(i) - rho(i + 1) * rho(i) * v(i + 1),
            {v_diff(i), v(i) * e(i) - e(i + 1) * v(i + 1) + v(i) * e(i + 1) - e(i) * v(i + 1), f1(i)}};
  }
  if (family == "FF2") {
    return {rho(i) * rho(i + 1) * v(i) - v(i + 1) * rho(i) * rho(i + 1),
            {v_diff(i), e(i) * v(i) - v(i + 1) * e(i + 1) + e(i + 1) * v(i) - v(i + 1) * e(i), f2(i)}};
  }
  throw std::invalid_argument("no cross-check for family '" + std::string(family) + "'");
}

}  // namespace

FreePoly expand(const Expr& x, int site, const RhoParams& params) {
  switch (x.kind()) {
    case Expr::Kind::Identity:
      return constant(1);
    case Expr::Kind::Generator: {
      const GeneratorSymbol& s = x.symbol();
      if (s.kind == GeneratorKind::RhoInv) throw std::invalid_argument("rho inverse cannot be expanded");
      if (s.kind == GeneratorKind::Rho) {
        const char e = letter(E(s.index), site);
        const char v = letter(V(s.index), site);
        FreePoly p = constant(params.a);
        accumulate(p, std::string(1, e), params.b);
        accumulate(p, std::string(1, v), params.c);
        return p;
      }
      FreePoly p;
      p[std::string(1, letter(s, site))] = 1;
      return p;
    }
    case Expr::Kind::Sum: {
      FreePoly out;
      for (const auto& t : x.terms()) out = add(out, expand(t.expr, site, params), t.coefficient);
      return out;
    }
    case Expr::Kind::Product: {
      FreePoly out = constant(1);
      for (const auto& f : x.factors()) out = multiply(out, expand(f, site, params));
      return out;
    }
    case Expr::Kind::Named:
      return expand(x.body(), site, params);
  }
  throw std::logic_error("unhandled expression kind");
}

FreePoly normal_form(const FreePoly& p, const QuadScalar& lambda) {
  FreePoly out;
  for (const auto& [source, coefficient] : p) {
    std::string word = source;
    QuadScalar c = coefficient;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : kRules) {
        const auto at = word.find(rule.from);
        if (at == std::string::npos) continue;
        word.replace(at, rule.from.size(), rule.to);
        if (rule.loop) c *= lambda;
        changed = true;
        break;
      }
    }
    accumulate(out, word, c);
  }
  return out;
}

std::string to_string(const FreePoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + (w.empty() ? "1" : w);
  }
  return out;
}

CrossCheck cross_check(std::string_view family, const RhoParams& params) {
  constexpr int site = 1;
  const Source src = source_for(family, site);
  const auto instances = relation_instances(family, 3, params);
  const RelationInstance& stored = instances.front();

  CrossCheck out;
  out.family = std::string(family);
  out.stored = stored.coefficients;
  const QuadScalar& lambda = params.lambda;
  out.brute_residual = normal_form(expand(src.brute, site, params), lambda);

  std::vector<FreePoly> columns;
  for (const auto& g : src.groups) columns.push_back(normal_form(expand(g, site, params), lambda));
  out.derived = solve(columns, out.brute_residual);

  // FF_j is stored as lhs = rhs with the b-dependent groups on the right.
  const FreePoly stored_residual =
      normal_form(add(expand(stored.lhs, site, params), expand(stored.rhs, site, params), -1), lambda);
  out.normal_forms_match = stored_residual == out.brute_residual;

  if (out.derived && out.derived->size() == out.stored.size()) {
    out.coefficients_match = true;
    for (std::size_t j = 0; j < out.stored.size(); ++j) {
      if (!((*out.derived)[j] == out.stored[j].value)) out.coefficients_match = false;
    }
  }
  return out;
}

}  // namespace vtl
