/*
   Copyright 2026 The radu Authors

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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "radu/cli/app.hpp"
#include "radu/cli/document.hpp"
#include "radu/errors.hpp"
#include "radu/gallery/hopf.hpp"
#include "radu/gallery/lie.hpp"

using namespace radu;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json cert;
};

Run radu_run(std::vector<std::string> args) {
    Run r;
    std::ostringstream out, err;
    r.code = cli::run(args, out, err, &r.cert);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << text;
    return path;
}

const std::string kDataG = std::string(RADU_DATA_DIR) + "/G-imperfect.alg";

}  // namespace

TEST_CASE("algebra documents round-trip after canonicalization") {
    const std::string messy =
        "# comment\nFIELD\nGF(2)(t)\nBASIS\nX Y Z\nBRACKETS\n[Y,Z] = Y   # reversed order\n[X,Y] = 0\n"
        "PPOWERS\nY = t*X\nX = X\nZ = Z\n";
    const auto doc = cli::parse_algebra(messy);
    const std::string canon = cli::print_algebra(doc);
    CHECK(cli::print_algebra(cli::parse_algebra(canon)) == canon);
    CHECK(canon.find("[Y,Z] = Y") != std::string::npos);
    CHECK(canon.find("[X,Y]") == std::string::npos);

    const auto g = cli::parse_algebra(slurp(kDataG));
    const auto G = gallery::imperfect_G(2);
    const auto& c = G.algebra.constants();
    CHECK(g.constants.field == c.field);
    CHECK(g.constants.labels == c.labels);
    CHECK(g.constants.brackets == c.brackets);
    CHECK(g.constants.ppowers == c.ppowers);
    REQUIRE(g.representation.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(g.representation[i] == G.representation[i]);
    const std::string printed = cli::print_algebra(g);
    CHECK(cli::print_algebra(cli::parse_algebra(printed)) == printed);
}

TEST_CASE("hopf documents round-trip") {
    for (const auto& h : {gallery::alpha_hopf(Field::prime(2), 2), gallery::mu_hopf(Field::prime(3))}) {
        const std::string text = cli::print_hopf(h.data());
        const auto back = cli::parse_hopf(text);
        CHECK(cli::print_hopf(back) == text);
        CHECK(validate_hopf(back).ok);
    }
}

TEST_CASE("parse diagnostics carry positions") {
    try {
        cli::parse_algebra("FIELD\nGF(4)\nBASIS\nX\n");
        FAIL("characteristic 4 accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.message()).find("not prime") != std::string::npos);
    }
    CHECK_THROWS_AS(cli::parse_algebra("FIELD\nGF(2)\nBASIS\nX Y\nBRACKETS\n[X,W] = Y\n"), ParseError);
    CHECK_THROWS_AS(cli::parse_algebra("FIELD\nGF(2)\nBASIS\nX\nCOMULT\nX = X@X\n"), ParseError);
    CHECK_NOTHROW(cli::parse_algebra("FIELD\nGF(2)\nBASIS\nX Y\nBRACKETS\n[X,X] = Y\n"));

    const auto bad = temp_file("radu_char4.alg", "FIELD\nGF(4)\nBASIS\nX\n");
    const auto r = radu_run({"validate", bad});
    CHECK(r.code == cli::bad_input);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("validate reports a failing document as a verdict") {
    const auto path = temp_file("radu_alt.alg", "FIELD\nGF(2)\nBASIS\nX Y\nBRACKETS\n[X,X] = Y\n");
    const auto r = radu_run({"validate", path});
    CHECK(r.code == cli::ok);
    CHECK(r.cert["verdict"] == "fail");
    CHECK(r.cert["payload"]["report"]["failed_check"] == "alternating");
}

TEST_CASE("radical certificate for the imperfect G") {
    const auto r = radu_run({"radical", "gallery:G-imperfect@p=2"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.cert["verdict"] == "exact");
    CHECK(r.cert["payload"]["radical"].empty());
    CHECK(r.cert["payload"]["strategy"].get<std::string>().rfind("S4", 0) == 0);
    for (const auto& [k, v] : r.cert["payload"].items()) CHECK(r.cert["provenance"].contains(k));
    const std::vector<std::string> keys = {"tool",    "version", "input_digest", "operation",
                                           "target",  "verdict", "payload",      "provenance", "timing_ms"};
    std::vector<std::string> got;
    for (const auto& [k, v] : r.cert.items()) got.push_back(k);
    CHECK(got == keys);

    const auto f = radu_run({"radical", kDataG});
    CHECK(f.cert["verdict"] == "exact");
    CHECK(f.cert["payload"] == r.cert["payload"]);
}

TEST_CASE("certificates are deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"report", kDataG}, {"p-reductive", "gallery:G-imperfect@p=2", "--seed", "7"},
          {"series-verify", "G-imperfect@p=2", "chain=0|X|X,Y|all"}, {"hopf-dual", "sl2-kernel@p=2"}}) {
        const auto a = radu_run(args), b = radu_run(args);
        CAPTURE(args[0]);
        REQUIRE(a.code == cli::ok);
        CHECK(a.cert["payload"].dump() == b.cert["payload"].dump());
        CHECK(a.cert["input_digest"] == b.cert["input_digest"]);
    }
    const auto s1 = radu_run({"report", kDataG, "--seed", "1"});
    const auto s2 = radu_run({"report", kDataG, "--seed", "2"});
    CHECK(s1.cert["input_digest"] != s2.cert["input_digest"]);
}

TEST_CASE("hopf commands") {
    const auto fr = radu_run({"hopf-frobenius", "alpha4", "r=1"});
    CHECK(fr.code == cli::ok);
    CHECK(fr.cert["verdict"] == "<x2, x3>");
    CHECK(radu_run({"hopf-frobenius", "alpha4", "r=2"}).cert["verdict"] == "<>");

    const auto refused = radu_run({"hopf-union", "product(alpha2,mu2)", "ideals=x|g+one"});
    CHECK(refused.code == cli::failure);
    const auto forced = radu_run({"hopf-union", "product(alpha2,mu2)", "ideals=x|g+one", "--force-nondirected"});
    CHECK(forced.code == cli::ok);
    CHECK(forced.cert["payload"]["subgroup_ideal"] == false);
    CHECK_FALSE(forced.cert["payload"]["witness"].is_null());

    const auto d = radu_run({"hopf-dual", "G-imperfect@p=2"});
    CHECK(d.code == cli::ok);
    CHECK(d.cert["payload"]["dimension"] == 8);
}

TEST_CASE("exit codes and json output") {
    CHECK(radu_run({"frobnicate", "alpha2"}).code == cli::usage);
    CHECK(radu_run({"radical"}).code == cli::usage);
    CHECK(radu_run({"radical", "no-such-thing"}).code == cli::bad_input);
    CHECK(radu_run({"hopf-dual", "alpha@2", "--hopf-cap", "1"}).code == cli::failure);
    CHECK(radu_run({"radical", "G-imperfect@p=2", "--strategy", "S9"}).code == cli::usage);

    const auto path = (std::filesystem::temp_directory_path() / "radu_cert.json").string();
    std::filesystem::remove(path);
    const auto r = radu_run({"mult-type", "mu@3", "--json", path});
    REQUIRE(r.code == cli::ok);
    const auto written = json::parse(slurp(path));
    CHECK(written["payload"] == r.cert["payload"]);
    CHECK(written["operation"] == "mult-type");
}

TEST_CASE("gallery and oracle-compare") {
    const auto g = radu_run({"gallery"});
    CHECK(g.code == cli::ok);
    CHECK(g.cert["verdict"] == "pass");
    CHECK(g.out.find("FAIL ") == std::string::npos);

    const auto o = radu_run({"oracle-compare", "dims=2"});
    CHECK(o.code == cli::ok);
    CHECK(o.cert["verdict"] == "agree");
    CHECK(o.cert["payload"]["instances"] == 19);

    const auto one = radu_run({"oracle-compare", "sl2-kernel@p=2"});
    CHECK(one.cert["verdict"] == "agree");
    CHECK(radu_run({"oracle-compare", kDataG}).code != cli::ok);
}

TEST_CASE("shipped hopf file matches the gallery alpha4") {
    const std::string path = std::string(RADU_DATA_DIR) + "/alpha4.hopf";
    const auto doc = cli::parse_hopf(slurp(path));
    CHECK(cli::print_hopf(doc) == cli::print_hopf(gallery::alpha_hopf(Field::prime(2), 2).data()));
    const auto r = radu_run({"hopf-frobenius", path, "r=1"});
    CHECK(r.cert["verdict"] == radu_run({"hopf-frobenius", "alpha4", "r=1"}).cert["verdict"]);
}
