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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VTL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json run_json(const std::string& args) { return nlohmann::json::parse(run("--format json " + args).out); }

}  // namespace

TEST_CASE("cli: verify examples") {
  auto r = run("verify --algebra brauer --rep matrix --n 3 --dim 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("0 fail") != std::string::npos);

  r = run("verify --algebra utl --rep matrix --n 3 --dim 2 --a -1 --b -1");
  CHECK(r.status == 0);
  CHECK(r.out.find("fu22: 2/2 as expected") != std::string::npos);

  const auto j = run_json("verify --algebra wtl --rep diagram --n 3 --lambda 3 --a 1 --b b_plus --c 1");
  bool saw = false;
  for (const auto& res : j["results"]) {
    if (res["family"] == "wTL1") {
      saw = true;
      CHECK(res["residual_zero"] == false);
      CHECK(res["expectation"] == "nonzero");
      CHECK(res["passed"] == true);
    }
  }
  CHECK(saw);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["negative_controls"].get<int>() > 0);
  CHECK(j["report_version"] == 1);
  CHECK(j["command"] == "verify");
}

TEST_CASE("cli: verify exit codes") {
  CHECK(run("verify --n 3").status == 0);
  CHECK(run("verify --rep matrix --lambda 5/2").status == 2);
  CHECK(run("verify --algebra nope").status == 2);
  CHECK(run("verify --a 1/0").status == 2);
  CHECK(run("verify --b b_plus --lambda sqrt").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("cli: verify output is reproducible") {
  const std::string args = "--format json --seed 9 verify --algebra utl --n 3 --lambda 2 --a 1 --b -1 --c 1/2";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.status == second.status);
  CHECK(first.out == second.out);
  CHECK(nlohmann::json::parse(first.out)["flags"]["seed"] == 9);
}

TEST_CASE("cli: solve") {
  auto r = run("solve --lambda 2");
  CHECK(r.out.find("b_plus  = -1 ") != std::string::npos);
  CHECK(r.out.find("b_minus = -1 ") != std::string::npos);
  r = run("solve --lambda 5/2");
  CHECK(r.out.find("b_plus  = -1/2 ") != std::string::npos);
  CHECK(r.out.find("b_minus = -2 ") != std::string::npos);
  const auto j = run_json("solve --lambda 3");
  CHECK(j["b_plus"]["x_num"] == -3);
  CHECK(j["b_plus"]["x_den"] == 2);
  CHECK(j["b_plus"]["y_num"] == 1);
  CHECK(j["b_plus"]["D_num"] == 5);
  CHECK(j["b_minus"]["y_num"] == -1);
}

TEST_CASE("cli: eval") {
  CHECK(run("eval \"v1 v2 e1 v2 v1\" --rep diagram --n 3").out == "(1)*{(T1,B1),(T2,T3),(B2,B3)}\n");
  CHECK(run("eval \"e1 e1\" --rep diagram --n 2 --lambda 7").out == "(7)*{(T1,T2),(B1,B2)}\n");
  CHECK(run("eval \"\" --n 2").out == "(1)*{(T1,B1),(T2,B2)}\n");
  const auto j = run_json("eval e1 --rep matrix --n 2 --dim 2");
  CHECK(j["result"]["rows"] == 4);
  CHECK(j["result"]["entries"][0] == nlohmann::json::array({1, 1, 0, 1}));
  CHECK(j["result"]["entries"][1] == nlohmann::json::array({0, 1, 0, 1}));
  const auto d = run_json("eval e1 --n 2");
  CHECK(d["result"][0]["matching"] == nlohmann::json::array({{"T1", "T2"}, {"B1", "B2"}}));
  CHECK(run("eval e5 --n 3").status == 2);
  CHECK(run("eval \"r1^-1\" --n 2 --a 1 --b 3 --c 1").status == 2);
  CHECK(run("eval e1 --rep matrix --dim 3/2").status == 2);
}

TEST_CASE("cli: trace") {
  CHECK(run("trace \"\" --n 3 --lambda 2").out == "8\n");
  CHECK(run("trace e1 --n 2 --lambda 5").out == "5\n");
  CHECK(run("trace \"v1 e2\" --n 3 --lambda 3").out == run("trace \"e2 v1\" --n 3 --lambda 3").out);
  CHECK(run("trace e1 --rep matrix --n 2 --dim 2").status == 2);
}
