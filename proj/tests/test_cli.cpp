/*
   Copyright 2026 The hecke-fusion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hecke/cli.hpp"
#include "hecke/serialize.hpp"

using namespace hecke;
using Json = json::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE(r.code == cli::kOk);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("enumerate counts") {
    const Json a = run_json({"enumerate", "-m", "2", "-n", "2"});
    CHECK(a["shapes"].size() == 5);
    CHECK(a["tableaux"] == 6);
    CHECK(a["dimension"] == 8);
    const Json b = run_json({"enumerate", "-m", "1", "-n", "0"});
    CHECK(b["shapes"].size() == 1);
    CHECK(b["tableaux"] == 1);
    CHECK(run_json({"enumerate", "-m", "1", "-n", "4"})["shapes"].size() == 5);
    CHECK(a["shapes"][2]["tableaux"][0]["residues"] == Json::array({"3", "0"}));
}

TEST_CASE("fuse renders (1 + t_1)/2 for the row shape") {
    const Json j = run_json({"fuse", "-m", "1", "-n", "2", "--tableau", "1"});
    REQUIRE(j["idempotents"].size() == 1);
    const Json& e = j["idempotents"][0];
    CHECK(e["tableau"] == Json::parse("[[[1,2]]]"));
    // The representation of (1 + t_1)/2, built independently of fusion.
    const auto r = build_representation(default_parameters(1, 2));
    const auto expected = (r.identity() + r.generator(1)) * Rational(1, 2);
    CHECK(e["element"] == json::encode(r, expected));
    CHECK(e["element"][0]["matrix"] == Json::parse(R"([["1"]])"));
    CHECK(e["element"][1]["matrix"] == Json::parse(R"([["0"]])"));
    CHECK(e["steps"].size() == 2);
    CHECK(e["steps"][1]["factor"] == "1/2");
}

TEST_CASE("fuse in generic mode renders (t - q_2)/(q_1 - q_2)") {
    const Json j = run_json({"fuse", "--generic", "-m", "2", "-n", "1", "--tableau", "1"});
    const auto r = build_representation(generic_parameters(2, 1));
    const QFraction q1 = QFraction::variable(0);
    const QFraction q2 = QFraction::variable(1);
    const auto expected = (r.generator(0) - r.scalar(q2)) * (QFraction(1) / (q1 - q2));
    CHECK(j["idempotents"][0]["element"] == json::encode(r, expected));
    CHECK(j["parameters"]["mode"] == "generic");
}

TEST_CASE("fuse without a tableau fuses every tableau") {
    const Json j = run_json({"fuse", "-m", "2", "-n", "2"});
    CHECK(j["idempotents"].size() == 6);
    CHECK(j["idempotents"][5]["id"] == 6);
}

TEST_CASE("generic scalars serialize with structured denominators") {
    const QFraction x = QFraction(Rational(3)) * QFraction::variable(0) / QFraction::linear(0, 1, 2);
    const Json j = json::encode(x);
    CHECK(j["const"] == "3");
    CHECK(j["num"] == "q1");
    CHECK(j["den"] == Json::parse(R"([["2", 1, 2]])"));
    CHECK(json::encode(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "-m", "2", "-n", "2", "--suite", "all"}).code == cli::kOk);
    const Run rejected = run({"verify", "-m", "2", "-n", "2", "-q", "0,1"});
    CHECK(rejected.code == cli::kSeparation);
    CHECK(rejected.err.find("separation") != std::string::npos);
    CHECK(run({"verify", "--suite", "identities", "--seed", "7"}).code == cli::kOk);
    CHECK(run({"fuse", "--tableau", "99"}).code == cli::kUsage);
    CHECK(run({"fuse", "--tableau", "0"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"verify", "--suite", "nonsense"}).code == cli::kUsage);
    CHECK(run({"enumerate", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"enumerate", "-m", "2", "-q", "0,1/2,3"}).code == cli::kUsage);
    CHECK(run({"enumerate", "-m", "2", "-q", "0,x"}).code == cli::kUsage);
    CHECK(run({"verify", "--grid", "--generic"}).code == cli::kUsage);
    CHECK(run({"enumerate", "--generic", "-q", "0,1"}).code == cli::kUsage);
    CHECK(run({"rep"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify reports are ordered and complete") {
    const Json j = run_json({"verify", "-m", "2", "-n", "2", "--seed", "7"});
    const auto& recs = j["records"];
    REQUIRE(!recs.empty());
    CHECK(recs[0]["suite"] == "relations");
    CHECK(recs[recs.size() - 1]["suite"] == "fusion");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == recs.size());
    CHECK(recs[0].find("witness") == recs[0].end());
}

TEST_CASE("text output carries timing, JSON does not") {
    const Run text = run({"enumerate"});
    CHECK(text.out.find("elapsed:") != std::string::npos);
    CHECK(text.out.find("shapes: 5  tableaux: 6  dimension: 8") != std::string::npos);
    const Run js = run({"enumerate", "--format", "json"});
    CHECK(js.out.find("elapsed") == std::string::npos);
}

TEST_CASE("rep dump lists generators per block") {
    const Json j = run_json({"rep", "dump", "-m", "1", "-n", "3"});
    REQUIRE(j["blocks"].size() == 3);
    CHECK(j["blocks"][1]["dim"] == 2);
    CHECK(j["blocks"][1]["generators"].contains("t_2"));
    CHECK(j["blocks"][0]["generators"]["t_1"] == Json::parse(R"([["1"]])"));
}

TEST_CASE("json output is independent of the job count") {
    const Run a = run({"fuse", "-m", "2", "-n", "3", "--format", "json"});
    const Run b = run({"fuse", "-m", "2", "-n", "3", "--format", "json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
