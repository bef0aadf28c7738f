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


#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "vtl/check.hpp"
#include "vtl/diagram_rep.hpp"
#include "vtl/tensor_rep.hpp"
#include "vtl/verify.hpp"

namespace {

using vtl::Json;

constexpr std::uint64_t kDefaultSeed = 20260101;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

struct RepFlags {
  std::string rep = "diagram";
  int n = 3;
  std::string lambda = "2";
  std::string dim;
  std::string a = "1";
  std::string b = "b_plus";
  std::string c = "0";

  void add_to(CLI::App* cmd, bool with_params) {
    cmd->add_option("--rep", rep, "diagram or matrix")->check(CLI::IsMember({"diagram", "matrix"}));
    cmd->add_option("--n", n, "strand count")->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", lambda, "loop value p/q");
    cmd->add_option("--dim", dim, "local dimension d of the matrix model (sets lambda = d)");
    if (with_params) {
      cmd->add_option("--a", a, "coefficient of 1 in rho");
      cmd->add_option("--b", b, "coefficient of E in rho; p/q, b_plus or b_minus");
      cmd->add_option("--c", c, "coefficient of v in rho");
    }
  }

  std::string loop() const { return dim.empty() ? lambda : dim; }

  vtl::RhoParams params() const {
    const vtl::QuadScalar l(vtl::parse_rational(loop()));
    return {vtl::resolve_parameter(a, l), vtl::resolve_parameter(b, l), vtl::resolve_parameter(c, l), l};
  }

  vtl::RepConfig matrix_config() const {
    const vtl::Rational d = vtl::parse_rational(loop());
    if (d.get_den() != 1 || d < 2 || d > 256) {
      throw std::invalid_argument("the matrix model needs an integer dimension d >= 2, got " + loop());
    }
    vtl::RepConfig cfg{n, static_cast<int>(d.get_num().get_si())};
    cfg.validate();
    return cfg;
  }

  Json to_json(bool with_params) const {
    Json out = Json::object();
    out["rep"] = rep;
    out["n"] = n;
    out[rep == "matrix" ? "dim" : "lambda"] = loop();
    if (with_params) {
      out["a"] = a;
      out["b"] = b;
      out["c"] = c;
    }
    return out;
  }
};

Json envelope(const std::string& command, Json flags) {
  Json out = Json::object();
  out["command"] = command;
  out["flags"] = std::move(flags);
  out["report_version"] = 1;
  return out;
}

std::string decimal(const vtl::QuadScalar& s) {
  std::ostringstream os;
  os << std::setprecision(12) << s.approx_real();
  if (s.approx_imag() != 0) os << (s.approx_imag() < 0 ? " - " : " + ") << std::abs(s.approx_imag()) << "i";
  return os.str();
}

int cmd_verify(const Globals& g, vtl::VerifyRequest req, const RepFlags& flags) {
  req.rep = flags.rep;
  req.n = flags.n;
  req.lambda = flags.loop();
  req.a = flags.a;
  req.b = flags.b;
  req.c = flags.c;
  req.seed = g.seed;
  const vtl::VerifyResult result = vtl::run_verify(req);
  if (g.format == "json") {
    std::cout << vtl::to_json(result).dump(2) << "\n";
  } else {
    std::cout << vtl::to_text(result);
  }
  return result.ok() ? kOk : kFailed;
}

int cmd_solve(const Globals& g, const std::string& lambda_text) {
  const vtl::QuadScalar lambda(vtl::parse_rational(lambda_text));
  const auto roots = vtl::solve_ab(lambda);
  const vtl::Rational disc = lambda.rational_part() * lambda.rational_part() - 4;
  if (g.format == "json") {
    Json flags = Json::object();
    flags["lambda"] = lambda_text;
    Json out = envelope("solve", std::move(flags));
    out["lambda"] = vtl::to_json(lambda);
    out["discriminant"] = vtl::to_string(disc);
    out["b_plus"] = vtl::to_json(roots.plus);
    out["b_minus"] = vtl::to_json(roots.minus);
    out["b_plus_approx"] = decimal(roots.plus);
    out["b_minus_approx"] = decimal(roots.minus);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "b^2 + lambda*b + 1 = 0 at lambda = " << lambda << ", lambda^2 - 4 = " << vtl::to_string(disc) << "\n";
  std::cout << "b_plus  = " << roots.plus << "  ~ " << decimal(roots.plus) << "\n";
  std::cout << "b_minus = " << roots.minus << "  ~ " << decimal(roots.minus) << "\n";
  return kOk;
}

int cmd_eval(const Globals& g, const std::string& word_text, const RepFlags& flags) {
  const vtl::RhoParams params = flags.params();
  const vtl::GeneratorWord word = vtl::parse_word(word_text, flags.n);
  Json result;
  std::string text;
  if (flags.rep == "matrix") {
    const vtl::MatrixRep rep(flags.matrix_config());
    const auto m = vtl::evaluate_word(word, rep, params);
    result = rep.to_json(m);
    text = m.to_string();
  } else {
    const vtl::DiagramRep rep(flags.n, params.lambda);
    const auto x = vtl::evaluate_word(word, rep, params);
    result = rep.to_json(x);
    text = x.to_string();
  }
  if (g.format == "json") {
    Json f = flags.to_json(true);
    f["word"] = word_text;
    Json out = envelope("eval", std::move(f));
    out["result"] = std::move(result);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

int cmd_trace(const Globals& g, const std::string& word_text, const RepFlags& flags) {
  if (flags.rep != "diagram") throw std::invalid_argument("trace is defined on the diagram representation only");
  const vtl::RhoParams params = flags.params();
  const vtl::DiagramRep rep(flags.n, params.lambda);
  const auto x = vtl::evaluate_word(vtl::parse_word(word_text, flags.n), rep, params);
  const vtl::QuadScalar t = vtl::closure_trace(x, params.lambda);
  if (g.format == "json") {
    Json f = flags.to_json(true);
    f["word"] = word_text;
    Json out = envelope("trace", std::move(f));
    out["trace"] = vtl::to_json(t);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for virtual Temperley-Lieb algebras and their quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized property samples")->capture_default_str();

  vtl::VerifyRequest req;
  RepFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "check every relation of an algebra in a representation");
  verify->add_option("--algebra", req.algebra, "vtl, wtl, utl or brauer")
      ->check(CLI::IsMember({"vtl", "wtl", "utl", "brauer"}));
  verify->add_option("--samples", req.samples, "random samples per property check")->check(CLI::NonNegativeNumber);
  verify_flags.add_to(verify, true);

  std::string solve_lambda = "2";
  auto* solve = app.add_subcommand("solve", "roots b of a^2b + ab^2 lambda + b^3 = 0 at a = 1");
  solve->add_option("--lambda", solve_lambda, "loop value p/q");

  std::string eval_word;
  RepFlags eval_flags;
  auto* eval = app.add_subcommand("eval", "evaluate a generator word");
  eval->add_option("word", eval_word, "tokens e<k>, v<k>, r<k>, r<k>^-1")->required();
  eval_flags.add_to(eval, true);

  std::string trace_word;
  RepFlags trace_flags;
  auto* trace = app.add_subcommand("trace", "closure trace of a generator word in the diagram algebra");
  trace->add_option("word", trace_word, "tokens e<k>, v<k>, r<k>, r<k>^-1")->required();
  trace_flags.add_to(trace, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(g, req, verify_flags);
    if (*solve) return cmd_solve(g, solve_lambda);
    if (*eval) return cmd_eval(g, eval_word, eval_flags);
    if (*trace) return cmd_trace(g, trace_word, trace_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
