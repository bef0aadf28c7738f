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


#include "vtl/verify.hpp"

#include <future>
#include <sstream>

#include "vtl/diagram_rep.hpp"
#include "vtl/relations.hpp"
#include "vtl/rewriting.hpp"
#include "vtl/sampling.hpp"
#include "vtl/tensor_rep.hpp"

namespace vtl {

namespace {

template <Representation R>
std::vector<CheckReport> check_families(const std::vector<std::string>& families, const R& rep,
                                        const RhoParams& params) {
  std::vector<std::future<std::vector<CheckReport>>> pending;
  for (const auto& family : families) {
    pending.push_back(std::async(std::launch::async, [&rep, &params, family] {
      std::vector<CheckReport> out;
      for (const auto& inst : relation_instances(family, rep.strands(), params)) {
        out.push_back(check_relation(inst, rep, params));
      }
      return out;
    }));
  }
  std::vector<CheckReport> reports;
  for (auto& f : pending) {
    for (auto& r : f.get()) reports.push_back(std::move(r));
  }
  return reports;
}

PropertyResult associativity(const DiagramRep& rep, Rng& rng, int samples) {
  PropertyResult out{"diagram associativity", samples, true, ""};
  for (int k = 0; k < samples; ++k) {
    const auto x = random_element(rng, rep.strands(), 3);
    const auto y = random_element(rng, rep.strands(), 3);
    const auto z = random_element(rng, rep.strands(), 3);
    if (!(rep.multiply(rep.multiply(x, y), z) == rep.multiply(x, rep.multiply(y, z)))) {
      out.passed = false;
      out.detail = "sample " + std::to_string(k) + ": (xy)z != x(yz)";
      return out;
    }
  }
  return out;
}

PropertyResult homomorphism(const MatrixRep& rep, Rng& rng, int samples) {
  PropertyResult out{"matrix homomorphism", samples, true, ""};
  const DiagramRep diagrams(rep.strands(), rep.loop_value());
  const RhoParams none{1, 0, 0, rep.loop_value()};
  for (int k = 0; k < samples; ++k) {
    const GeneratorWord w = random_word(rng, rep.strands(), 8);
    const auto product = rep_element(evaluate_word(w, diagrams, none), rep.config());
    if (!(product == evaluate_word(w, rep, none))) {
      out.passed = false;
      out.detail = "word '" + render_word(w) + "'";
      return out;
    }
  }
  return out;
}

PropertyResult registry_cross_check(const std::string& family, const RhoParams& params) {
  const CrossCheck cc = cross_check(family, params);
  PropertyResult out{family + " cross-check", 1, cc.coefficients_match && cc.normal_forms_match, ""};
  if (!out.passed) {
    out.detail = cc.derived ? "coefficients or normal form differ" : "brute residual outside the group span";
  }
  return out;
}

QuadScalar parse_lambda(const VerifyRequest& req) {
  const Rational lambda = parse_rational(req.lambda);
  if (req.rep == "matrix") {
    if (lambda.get_den() != 1 || lambda < 2) {
      throw std::invalid_argument("the matrix model needs an integer dimension d >= 2, got " + req.lambda);
    }
  }
  return QuadScalar(lambda);
}

}  // namespace

QuadScalar resolve_parameter(std::string_view text, const QuadScalar& lambda) {
  if (text == "b_plus") return solve_ab(lambda).plus;
  if (text == "b_minus") return solve_ab(lambda).minus;
  return QuadScalar(parse_rational(text));
}

bool VerifyResult::ok() const {
  if (summary.fail > 0) return false;
  for (const auto& p : properties) {
    if (!p.passed) return false;
  }
  return true;
}

std::vector<std::string> algebra_families(std::string_view algebra, const RhoParams& params) {
  if (algebra == "brauer") return {"TLR", "VCR", "brauer", "brauer.F"};
  const bool a0 = params.a.is_zero();
  std::vector<std::string> out{"TLR", "VCR", "VEV", "BGR", "VBR", "vTL"};
  if (params.c.is_zero()) out.push_back("ab");
  if (algebra == "vtl") {
    if (a0) out.push_back("vTL.a0");
    return out;
  }
  if (algebra != "wtl" && algebra != "utl") {
    throw std::invalid_argument("unknown algebra '" + std::string(algebra) + "' (expected vtl, wtl, utl or brauer)");
  }
  for (const char* f : {"F1", "FF1", "wTL1"}) out.emplace_back(f);
  if (algebra == "wtl") {
    if (a0) out.push_back("wTL1.a0");
    return out;
  }
  for (const char* f : {"F2", "FF2", "wTL2", "fu22"}) out.emplace_back(f);
  if (a0) out.push_back("uTL.a0");
  return out;
}

VerifyResult run_verify(const VerifyRequest& request) {
  if (request.rep != "diagram" && request.rep != "matrix") {
    throw std::invalid_argument("unknown representation '" + request.rep + "' (expected diagram or matrix)");
  }
  if (request.n < 2) throw std::invalid_argument("verify needs at least 2 strands");
  if (request.samples < 0) throw std::invalid_argument("sample count must be non-negative");

  VerifyResult result;
  result.request = request;
  const QuadScalar lambda = parse_lambda(request);
  result.params = RhoParams{resolve_parameter(request.a, lambda), resolve_parameter(request.b, lambda),
                            resolve_parameter(request.c, lambda), lambda};
  try {
    result.params.discriminant();
  } catch (const DiscriminantMismatch& e) {
    throw std::invalid_argument(std::string("parameters live in different quadratic fields: ") + e.what());
  }

  for (const auto& f : algebra_families(request.algebra, result.params)) {
    (relation_family(f).min_n <= request.n ? result.families : result.skipped).push_back(f);
  }

  Rng rng(request.seed);
  if (request.rep == "diagram") {
    const DiagramRep rep(request.n, lambda);
    result.reports = check_families(result.families, rep, result.params);
    result.properties.push_back(associativity(rep, rng, request.samples));
  } else {
    const MatrixRep rep(RepConfig{request.n, static_cast<int>(lambda.rational_part().get_num().get_si())});
    result.reports = check_families(result.families, rep, result.params);
    result.properties.push_back(homomorphism(rep, rng, request.samples));
  }
  for (const auto& f : result.families) {
    if (f == "vTL" || f == "FF1" || f == "FF2") result.properties.push_back(registry_cross_check(f, result.params));
  }

  for (const auto& r : result.reports) {
    if (r.status == CheckStatus::Degenerate) {
      ++result.summary.degenerate;
    } else if (r.failed()) {
      ++result.summary.fail;
    } else {
      ++result.summary.pass;
      if (r.negative_control()) ++result.summary.negative_controls;
    }
  }
  return result;
}

Json to_json(const VerifyRequest& r) {
  Json out = Json::object();
  out["algebra"] = r.algebra;
  out["rep"] = r.rep;
  out["n"] = r.n;
  out[r.rep == "matrix" ? "dim" : "lambda"] = r.lambda;
  out["a"] = r.a;
  out["b"] = r.b;
  out["c"] = r.c;
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  return out;
}

Json to_json(const VerifyResult& result) {
  Json out = Json::object();
  out["command"] = "verify";
  out["flags"] = to_json(result.request);
  out["report_version"] = 1;
  Json summary = Json::object();
  summary["pass"] = result.summary.pass;
  summary["fail"] = result.summary.fail;
  summary["negative_controls"] = result.summary.negative_controls;
  summary["degenerate"] = result.summary.degenerate;
  summary["ok"] = result.ok();
  out["summary"] = std::move(summary);
  out["params"] = to_json(result.params);
  out["families"] = result.families;
  out["skipped_families"] = result.skipped;
  Json props = Json::array();
  for (const auto& p : result.properties) {
    Json j = Json::object();
    j["name"] = p.name;
    j["samples"] = p.samples;
    j["passed"] = p.passed;
    if (!p.detail.empty()) j["detail"] = p.detail;
    props.push_back(std::move(j));
  }
  out["properties"] = std::move(props);
  Json results = Json::array();
  for (const auto& r : result.reports) results.push_back(to_json(r));
  out["results"] = std::move(results);
  return out;
}

std::string to_text(const VerifyResult& result) {
  std::ostringstream os;
  const auto& req = result.request;
  const auto& p = result.params;
  os << "verify " << req.algebra << " on " << req.rep << " n=" << req.n << (req.rep == "matrix" ? " d=" : " lambda=")
     << req.lambda << " seed=" << req.seed << "\n";
  os << "  a = " << p.a << ", b = " << p.b << ", c = " << p.c << "\n";
  for (const auto& family : result.families) {
    int total = 0, pass = 0, negative = 0, degenerate = 0;
    for (const auto& r : result.reports) {
      if (r.family != family) continue;
      ++total;
      if (r.status == CheckStatus::Degenerate) {
        ++degenerate;
        continue;
      }
      if (!r.failed()) ++pass;
      if (r.negative_control()) ++negative;
    }
    os << "  " << family << ": ";
    if (degenerate == total) {
      os << "degenerate (b = 0), " << total << " instance(s) not evaluated\n";
      continue;
    }
    os << pass << "/" << (total - degenerate) << " as expected";
    if (negative > 0) os << " (" << negative << " nonzero as expected)";
    os << (pass == total - degenerate ? "" : "  FAIL") << "\n";
    for (const auto& r : result.reports) {
      if (r.family != family || !r.failed()) continue;
      os << "    site " << r.site << ": " << r.relation << "\n      expected " << to_string(r.expectation)
         << ", residual " << (r.residual_zero ? "zero" : "nonzero");
      if (!r.witness.is_null()) os << ", e.g. " << r.witness["text"].get<std::string>();
      os << "\n";
    }
  }
  for (const auto& f : result.skipped) os << "  " << f << ": skipped, needs n >= " << relation_family(f).min_n << "\n";
  for (const auto& prop : result.properties) {
    os << "  " << prop.name << ": " << (prop.passed ? "ok" : "FAIL") << " (" << prop.samples << " sample"
       << (prop.samples == 1 ? "" : "s") << ")";
    if (!prop.detail.empty()) os << " " << prop.detail;
    os << "\n";
  }
  os << "summary: " << result.summary.pass << " pass, " << result.summary.fail << " fail, "
     << result.summary.negative_controls << " negative controls, " << result.summary.degenerate << " degenerate\n";
  return os.str();
}

}  // namespace vtl
