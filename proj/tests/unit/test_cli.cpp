// Copyright 2026 The poissonlike Authors
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

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"

using poissonlike::testing::fixture_path;
namespace cli = poissonlike::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kPi = "c1*y1^y2 + c2*y1^y3 + c3*y1^y4 + c4*y2^y3";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"betti", fixture_path("type1.json")}).code == cli::kUsageError);
  CHECK(run({"polyfield", "dims", "--n", "4"}).code == cli::kUsageError);
  CHECK(run({"validate", fixture_path("type1.json"), "--format", "xml"}).code == cli::kUsageError);
}

TEST_CASE("domain errors exit with 1") {
  const Run missing = run({"validate", "/nonexistent/algebra.json"});
  CHECK(missing.code == cli::kDomainError);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({"betti", fixture_path("type1.json"), "--tensor", kPi}).code == cli::kDomainError);
  CHECK(run({"betti", fixture_path("type1.json"), "--tensor", "y9"}).code == cli::kDomainError);
}

TEST_CASE("validate") {
  const Run r = run({"validate", fixture_path("abelian3.json"), "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["violations"].empty());
  CHECK(run({"validate", fixture_path("type12.json")}).out.empty());
}

TEST_CASE("betti table and json agree") {
  const std::vector<std::string> base{"betti", fixture_path("type1.json"), "--tensor", kPi,
                                      "--set", "c1=0", "c2=0", "c3=1", "c4=1"};
  const Run table = run(base);
  CHECK(table.code == cli::kOk);
  CHECK(table.out.find("Betti") != std::string::npos);
  auto j_args = base;
  j_args.insert(j_args.end(), {"--format", "json"});
  const Run json = run(j_args);
  REQUIRE(json.code == cli::kOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["report"]["betti"] == nlohmann::json({2, 2, 2, 1}));
  CHECK(j["alternating_sum"]["equal"] == true);
}

TEST_CASE("poisson") {
  const Run r = run({"poisson", fixture_path("type1.json"), "--tensor", "y2^y4", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["equations"].size() == 1);
  const Run f = run({"poisson", fixture_path("type12.json"), "--side", "form", "--tensor", "z1"});
  CHECK(f.code == cli::kOk);
  CHECK(f.out.rfind("[T,T] = 0", 0) == 0);
}

TEST_CASE("dual") {
  const Run r = run({"dual", fixture_path("type1.json"), "--tensor", kPi, "--set", "c1=0", "c2=1", "c3=0",
                     "c4=0", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out).contains("delta"));
}

TEST_CASE("polyfield commands") {
  CHECK(run({"polyfield", "dims", "--n", "4", "--k", "1", "--m", "2"}).out == "24\n");
  const Run b = run({"polyfield", "betti", "--tensor-file", fixture_path("mytgt.json"), "--set", "C7=1",
                     "--format", "json"});
  REQUIRE(b.code == cli::kOk);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["d_pi"]["betti"] == nlohmann::json({1, 6, 15, 10}));
  CHECK(j["delta"]["betti"] == nlohmann::json({1, 6, 15, 10}));
  const Run s = run({"polyfield", "system", "--n", "4", "--h", "2", "--m", "2", "--format", "json"});
  CHECK(s.code == cli::kOk);
  CHECK(run({"--help"}).code == cli::kOk);
}
