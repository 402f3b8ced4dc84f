// Copyright 2026 The dprs Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dprs/bounds.h"
#include "dprs/instance_io.h"
#include "dprs/oracle.h"
#include "dprs/trace_io.h"
#include "support/fixtures.h"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path Scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "dprs_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Result Cli(const std::string& args) {
  const fs::path out = Scratch() / "stdout.txt";
  const fs::path err = Scratch() / "stderr.txt";
  const std::string cmd = std::string(DPRS_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = dprs::ReadTextFile(out);
  r.err = dprs::ReadTextFile(err);
  return r;
}

std::string P(const std::string& name) { return (Scratch() / name).string(); }

double Field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + ": ");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 2));
}

TEST_CASE("gen is deterministic") {
  REQUIRE(Cli("gen --seed 7 -o " + P("a.json")).code == 0);
  REQUIRE(Cli("gen --seed 7 -o " + P("b.json")).code == 0);
  CHECK(dprs::ReadTextFile(P("a.json")) == dprs::ReadTextFile(P("b.json")));
  REQUIRE(Cli("gen --seed 8 -o " + P("c.json")).code == 0);
  CHECK(dprs::ReadTextFile(P("a.json")) != dprs::ReadTextFile(P("c.json")));
}

TEST_CASE("gen with small shapes") {
  const Result r = Cli("gen --seed 1 --k 2 --m 2");
  REQUIRE(r.code == 0);
  const dprs::Instance inst = dprs::InstanceFromJson(r.out);
  CHECK(inst.num_parties() == 2);
  CHECK(inst.num_resources() == 2);
}

TEST_CASE("gen with a params file") {
  dprs::WriteTextFile(P("params.json"), R"({"parties": 3, "products": [2, 3]})");
  const Result r = Cli("gen --seed 2 --params " + P("params.json"));
  REQUIRE(r.code == 0);
  const dprs::Instance inst = dprs::InstanceFromJson(r.out);
  CHECK(inst.num_parties() == 3);
  for (const auto& p : inst.parties) CHECK(p.num_vars() <= 3);
}

TEST_CASE("missing params file is a usage error") {
  const Result r = Cli("gen --params " + P("nope.json"));
  CHECK(r.code == 2);
  CHECK(r.err.find("params file not found") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(Cli("").code == 2);
  CHECK(Cli("frobnicate").code == 2);
  CHECK(Cli("solve").code == 2);
  CHECK(Cli("run x.json --mode weird").code == 2);
  CHECK(Cli("--help").code == 0);
}

TEST_CASE("solve reports the oracle pair") {
  dprs::WriteInstanceFile(P("one.json"), dprs_test::OnePartyInstance());
  const Result r = Cli("solve " + P("one.json"));
  REQUIRE(r.code == 0);
  CHECK(Field(r.out, "Z_P") == doctest::Approx(6.0));
  CHECK(Field(r.out, "Z_D") == doctest::Approx(6.0));
  CHECK(r.out.find("lambda*: [") != std::string::npos);

  REQUIRE(Cli("gen --seed 3 -o " + P("g3.json")).code == 0);
  const Result g = Cli("solve " + P("g3.json"));
  REQUIRE(g.code == 0);
  CHECK(Field(g.out, "strong_duality_residual") <= 1e-6);
}

TEST_CASE("solve on an infeasible instance exits 3") {
  dprs::Instance inst = dprs_test::OnePartyInstance();
  inst.parties[0].rhs = {-1.0, 0.0};
  dprs::WriteInstanceFile(P("infeasible.json"), inst);
  const Result r = Cli("solve " + P("infeasible.json"));
  CHECK(r.code == 3);
  CHECK(r.err.find("Infeasible") != std::string::npos);
}

TEST_CASE("data-hiding run: min-so-far gap within range") {
  REQUIRE(Cli("gen --seed 5 -o " + P("g5.json")).code == 0);
  REQUIRE(Cli("run " + P("g5.json") + " --iters 1000 --trace " + P("dh.csv") +
              " --summary " + P("dh.json"))
              .code == 0);
  std::istringstream in(dprs::ReadTextFile(P("dh.csv")));
  std::string line;
  std::getline(in, line);
  double best = 1e300;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string t, dual, primal, gap;
    std::getline(cells, t, ',');
    std::getline(cells, dual, ',');
    std::getline(cells, primal, ',');
    std::getline(cells, gap, ',');
    const double g = std::stod(gap);
    CHECK(g >= -1e-6);
    best = std::min(best, g);
    ++rows;
  }
  CHECK(rows == 1000);
  CHECK(best > 0.0);
  CHECK(best < 30.0);
}

TEST_CASE("budget overrun exits 4") {
  REQUIRE(Cli("gen --seed 6 -o " + P("g6.json")).code == 0);
  const Result r =
      Cli("run " + P("g6.json") + " --mode pure --eps 0.1 --T 100 --iters 101");
  CHECK(r.code == 4);
  CHECK(r.err.find("privacy budget exhausted") != std::string::npos);
  CHECK(Cli("run " + P("g6.json") + " --mode pure --eps 0.1 --T 100 --iters 100 "
            "--summary " + P("ok.json"))
            .code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  REQUIRE(Cli("gen --seed 9 -o " + P("g9.json")).code == 0);
  const std::string base = "run " + P("g9.json") +
                           " --mode approx --eps 0.15 --delta 0.1 --T 100";
  REQUIRE(Cli(base + " --seed 3 --trace " + P("r1.csv") + " --summary " + P("r1.json")).code == 0);
  REQUIRE(Cli(base + " --seed 3 --trace " + P("r2.csv") + " --summary " + P("r2.json")).code == 0);
  CHECK(dprs::ReadTextFile(P("r1.csv")) == dprs::ReadTextFile(P("r2.csv")));
  CHECK(dprs::ReadTextFile(P("r1.json")) == dprs::ReadTextFile(P("r2.json")));
  REQUIRE(Cli(base + " --seed 4 --trace " + P("r3.csv")).code == 0);
  CHECK(dprs::ReadTextFile(P("r1.csv")) != dprs::ReadTextFile(P("r3.csv")));
}

TEST_CASE("theorem step and message log") {
  REQUIRE(Cli("gen --seed 10 -o " + P("g10.json")).code == 0);
  const Result r = Cli("run " + P("g10.json") +
                       " --mode pure --eps 0.1 --T 20 --step theorem --log " +
                       P("msgs.jsonl") + " --summary " + P("th.json"));
  REQUIRE(r.code == 0);
  const std::string log = dprs::ReadTextFile(P("msgs.jsonl"));
  CHECK(std::count(log.begin(), log.end(), '\n') == 2 * 20 * 5);
  CHECK(log.find("\"u_k\"") == std::string::npos);
  CHECK(Cli("run " + P("g10.json") + " --step theorem").code == 2);
}

TEST_CASE("bounds report") {
  REQUIRE(Cli("gen --seed 11 -o " + P("g11.json")).code == 0);
  const Result r = Cli("bounds " + P("g11.json") + " --T 100 --eps 0.1 --delta 0.1");
  REQUIRE(r.code == 0);
  const dprs::Instance inst = dprs::ReadInstanceFile(P("g11.json"));
  const double M = dprs::DistanceM(dprs::Vector(inst.num_resources(), 0.0),
                                   dprs::SolveCentralized(inst).lambda);
  const dprs::BoundInputs bi = dprs::MakeBoundInputs(inst, M, 100, 0.1, 0.1);
  CHECK(Field(r.out, "M") == doctest::Approx(M).epsilon(1e-11));
  CHECK(Field(r.out, "pure_bound") == doctest::Approx(dprs::PureBound(bi)).epsilon(1e-11));
  CHECK(Field(r.out, "approx_bound") ==
        doctest::Approx(dprs::ApproxBound(bi)).epsilon(1e-11));
  const Result na = Cli("bounds " + P("g11.json") + " --eps 2");
  REQUIRE(na.code == 0);
  CHECK(na.out.find("approx_bound: n/a") != std::string::npos);
}

TEST_CASE("sweep and converge subcommands") {
  const Result s = Cli("sweep -q --runs 2 --T 5 --eps 0.1,0.2 --delta 0.1 "
                       "--shares 0.5 --markets 1.2,K");
  REQUIRE(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 1 + 2 * 2);
  CHECK(s.out.find(",5,2,") != std::string::npos);  // market K = 5 parties
  CHECK(Cli("sweep -q --runs 1 --markets abc").code == 2);
  const Result c = Cli("converge -q --runs 2 --iters 10");
  REQUIRE(c.code == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 11);
}

}  // namespace
