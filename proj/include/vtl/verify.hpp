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

#include <cstdint>
#include <string>
#include <vector>

#include "vtl/check.hpp"
#include "vtl/rho.hpp"
#include "vtl/serialize.hpp"

namespace vtl {

/// Reads a parameter flag: a rational "p/q" or one of the keywords
/// b_plus / b_minus, resolved as roots of b² + λb + 1 = 0.
QuadScalar resolve_parameter(std::string_view text, const QuadScalar& lambda);

struct VerifyRequest {
  std::string algebra = "vtl";  // vtl | wtl | utl | brauer
  std::string rep = "diagram";  // diagram | matrix
  int n = 3;
  /// Loop value; the local dimension d for the matrix model.
  std::string lambda = "2";
  std::string a = "1";
  std::string b = "b_plus";
  std::string c = "0";
  std::uint64_t seed = 20260101;
  /// Random samples per property check.
  int samples = 25;
};

/// A seeded property check or registry cross-check run alongside the
/// relation instances.
struct PropertyResult {
  std::string name;
  int samples = 0;
  bool passed = false;
  std::string detail;
};

struct VerifySummary {
  int pass = 0;
  int fail = 0;
  int negative_controls = 0;
  int degenerate = 0;
};

struct VerifyResult {
  VerifyRequest request;
  RhoParams params;
  std::vector<std::string> families;
  /// Families of the algebra that need more strands than requested.
  std::vector<std::string> skipped;
  std::vector<CheckReport> reports;
  std::vector<PropertyResult> properties;
  VerifySummary summary;

  /// True when every expectation was met.
  bool ok() const;
};

/// Relation families checked for an algebra, in report order, before
/// dropping those that need more strands. Depends on a and c through the
/// a = 0 and c = 0 specialisations.
std::vector<std::string> algebra_families(std::string_view algebra, const RhoParams& params);

/// Throws std::invalid_argument for a malformed request (unknown algebra
/// or representation, non-integer dimension, bad parameter text).
VerifyResult run_verify(const VerifyRequest& request);

Json to_json(const VerifyRequest& request);
Json to_json(const VerifyResult& result);
std::string to_text(const VerifyResult& result);

}  // namespace vtl
