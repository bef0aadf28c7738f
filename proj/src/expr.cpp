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

#include "vtl/expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vtl {

struct Expr::Node {
  Kind kind = Kind::Sum;
  GeneratorSymbol symbol;
  std::vector<Term> terms;
  std::vector<Expr> factors;
  std::string name;
};

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr Expr::one() {
  Node n;
  n.kind = Kind::Identity;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::gen(GeneratorSymbol s) {
  Node n;
  n.kind = Kind::Generator;
  n.symbol = s;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::sum(std::vector<Term> terms) {
  Node n;
  n.kind = Kind::Sum;
  n.terms = std::move(terms);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return one();
  if (factors.size() == 1) return factors.front();
  Node n;
  n.kind = Kind::Product;
  for (auto& f : factors) {
    // Flatten nested products.
    if (f.kind() == Kind::Product) {
      n.factors.insert(n.factors.end(), f.factors().begin(), f.factors().end());
    } else {
      n.factors.push_back(std::move(f));
    }
  }
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::named(std::string name, Expr body) {
  Node n;
  n.kind = Kind::Named;
  n.name = std::move(name);
  n.factors.push_back(std::move(body));
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const GeneratorSymbol& Expr::symbol() const { return node_->symbol; }
const std::vector<Expr::Term>& Expr::terms() const { return node_->terms; }
const std::vector<Expr>& Expr::factors() const { return node_->factors; }
const std::string& Expr::name() const { return node_->name; }

const Expr& Expr::body() const {
  if (node_->kind != Kind::Named) throw std::logic_error("Expr::body on unnamed node");
  return node_->factors.front();
}

int Expr::max_index() const {
  switch (kind()) {
    case Kind::Identity:
      return 0;
    case Kind::Generator:
      return symbol().index;
    case Kind::Sum: {
      int m = 0;
      for (const auto& t : terms()) m = std::max(m, t.expr.max_index());
      return m;
    }
    case Kind::Product:
    case Kind::Named: {
      int m = 0;
      for (const auto& f : factors()) m = std::max(m, f.max_index());
      return m;
    }
  }
  return 0;
}

std::string Expr::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Identity:
      os << "1";
      break;
    case Kind::Generator:
      os << symbol().to_string();
      break;
    case Kind::Named:
      os << name();
      break;
    case Kind::Product: {
      bool first = true;
      for (const auto& f : factors()) {
        if (!first) os << " ";
        first = false;
        bool wrap = f.kind() == Kind::Sum;
        os << (wrap ? "(" : "") << f.to_string() << (wrap ? ")" : "");
      }
      break;
    }
    case Kind::Sum: {
      if (terms().empty()) {
        os << "0";
        break;
      }
      bool first = true;
      for (const auto& t : terms()) {
        QuadScalar c = t.coefficient;
        bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
        if (first) {
          if (negative) os << "-";
        } else {
          os << (negative ? " - " : " + ");
        }
        first = false;
        if (negative) c = -c;
        bool wrap = t.expr.kind() == Kind::Sum;
        if (!(c == QuadScalar(1))) os << "(" << c << ")*";
        os << (wrap ? "(" : "") << t.expr.to_string() << (wrap ? ")" : "");
      }
      break;
    }
  }
  return os.str();
}

Expr operator*(const Expr& x, const Expr& y) { return Expr::product({x, y}); }

Expr operator+(const Expr& x, const Expr& y) { return Expr::sum({{1, x}, {1, y}}); }

Expr operator-(const Expr& x, const Expr& y) { return Expr::sum({{1, x}, {-1, y}}); }

Expr operator*(const QuadScalar& s, const Expr& x) { return Expr::sum({{s, x}}); }

namespace {

void collect_named(const Expr& x, std::vector<Expr>& out) {
  switch (x.kind()) {
    case Expr::Kind::Named:
      out.push_back(x);
      collect_named(x.body(), out);
      break;
    case Expr::Kind::Sum:
      for (const auto& t : x.terms()) collect_named(t.expr, out);
      break;
    case Expr::Kind::Product:
      for (const auto& f : x.factors()) collect_named(f, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Expr> named_groups(const Expr& x) {
  std::vector<Expr> out;
  collect_named(x, out);
  return out;
}

}  // namespace vtl
