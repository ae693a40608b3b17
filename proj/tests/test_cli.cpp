// Copyright 2026 The as90 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "as90/cli.hpp"

#include <sstream>

#include "as90/field.hpp"
#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = as90::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("root text output") {
    const auto r = invoke({"root", "--p", "2", "--n", "3", "--y", "t+t^2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "polynomial: t^2-t-y\n"
          "field: GF(2^3)/GF(2^1) mod t^3+t^2+1\n"
          "y: t^2+t\n"
          "result: split: 2 roots x+u, u in GF(2)\n"
          "method: coprime\n"
          "note: z=1/3\n"
          "coefficient_period: 2\n"
          "roots: t, t+1\n"
          "verified: true\n");
    // y^2 reduced modulo t^3+t^2+1 is t+1.
    const auto ctx = as90::FieldCtx::make(2, 3);
    const auto y = ctx.parse("t+t^2");
    CHECK(as90::to_string(y * y) == "t+1");
}

TEST_CASE("no root over F_4 with q = 4") {
    const auto r = invoke({"root", "--p", "2", "--n", "2", "--f", "2", "--y", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no root; irreducibility undetermined") != std::string::npos);
    CHECK(r.out.find("irreducible:") == std::string::npos);

    const auto j = Json::parse(invoke({"root", "--p", "2", "--n", "2", "--f", "2", "--y", "1", "--json"}).out);
    CHECK(j["outcome"] == "undetermined");
    CHECK(j["roots"].empty());
    CHECK(j["method"].is_null());

    const auto prime = invoke({"root", "--p", "2", "--n", "3", "--y", "1"});
    CHECK(prime.out.find("irreducible: Tr(y) != 0 and q = p") != std::string::npos);
}

TEST_CASE("root JSON schema") {
    const auto r = invoke({"root", "--p", "2", "--n", "6", "--method", "p2mod3", "--y", "t^2+t", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    for (const char* key : {"polynomial", "field", "y", "roots", "method", "verified"}) CHECK(j.contains(key));
    CHECK(j["polynomial"] == "t^2-t-y");
    CHECK(j["method"] == "p2mod3");
    CHECK(j["verified"] == true);
    CHECK(j["coefficient_period"] == 4);
    CHECK(j["roots"].size() == 2);

    const auto ctx = as90::FieldCtx::make(2, 6);
    const auto y = ctx.parse("t^2+t");
    for (const auto& text : j["roots"]) {
        const auto x = ctx.parse(text.get<std::string>());
        CHECK(x * x - x == y);
    }
}

TEST_CASE("every method agrees on the root coset") {
    const std::vector<std::string> base{"root", "--p", "2", "--n", "9", "--y", "t^2+t", "--json"};
    std::vector<std::string> roots;
    for (const std::string method : {"auto", "coprime", "table", "prime-r", "general", "brute"}) {
        auto args = base;
        args.insert(args.end(), {"--method", method});
        if (method == "prime-r") args.insert(args.end(), {"--r", "7"});
        const auto r = invoke(args);
        REQUIRE_MESSAGE(r.code == 0, method << ": " << r.err);
        const auto j = Json::parse(r.out);
        CHECK(j["roots"].size() == 2);
        roots.push_back(j["roots"].dump());
    }
    for (const auto& s : roots) CHECK(s == roots.front());
}

TEST_CASE("large root sets print one representative") {
    const auto r = invoke({"root", "--p", "2", "--n", "14", "--f", "7", "--y", "0", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["root_count"] == 128);
    CHECK(j["roots_complete"] == false);
    CHECK(j["roots"].size() == 1);
}

TEST_CASE("seeds are logged and reproducible") {
    const std::vector<std::string> args{"root", "--p", "3", "--n", "6", "--y", "0", "--method", "general", "--witness",
                                        "random", "--seed", "5"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed: 5") != std::string::npos);
    CHECK(a.out.find("random-scaled") != std::string::npos);
}

TEST_CASE("coefficient element format") {
    const auto a = invoke({"root", "--p", "2", "--n", "3", "--y", "0,1,1", "--elem-format", "coeffs"});
    const auto b = invoke({"root", "--p", "2", "--n", "3", "--y", "t+t^2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    auto r = invoke({"root", "--p", "2", "--n", "12", "--method", "prime-r", "--r", "7", "--y", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: BadOrder:", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    r = invoke({"root", "--p", "2", "--n", "3", "--method", "coprime", "--y", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NoRoot") != std::string::npos);

    CHECK(invoke({"root", "--p", "4", "--n", "2", "--y", "0"}).code == 2);
    CHECK(invoke({"root", "--p", "2", "--n", "3", "--y", "t+"}).code == 2);
    CHECK(invoke({"root", "--p", "2"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"root", "--p", "2", "--n", "3", "--y", "0", "--method", "prime-r"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("period") {
    auto r = invoke({"period", "--p", "2", "--n", "4", "--modulus", "t^4+t^3+1", "--z", "t"});
    CHECK(r.code == 0);
    CHECK(r.out.find("period: 8\n") != std::string::npos);
    r = invoke({"period", "--p", "2", "--n", "2", "--z", "t", "--json"});
    CHECK(r.out == "{\"e\":2,\"n_p\":2,\"period\":4,\"pass\":true}\n");
    CHECK(invoke({"period", "--p", "3", "--n", "3", "--z", "1"}).code == 2);
}

TEST_CASE("h90") {
    const auto r = invoke({"h90", "--p", "3", "--n", "4", "--y", "0", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["x"] == "0");
    CHECK(j["verified"] == true);
    CHECK(j["witness"] == "deterministic-subfield");
    CHECK(invoke({"h90", "--p", "2", "--n", "3", "--y", "1"}).code == 2);
    const auto given = invoke({"h90", "--p", "2", "--n", "3", "--y", "t+t^2", "--z", "1"});
    CHECK(given.out.find("x: t+1\n") != std::string::npos);
}

TEST_CASE("table") {
    auto r = invoke({"table", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5/5 rows pass\n") != std::string::npos);
    r = invoke({"table", "--verify", "--as-printed"});
    CHECK(r.out.find("order=FAIL") != std::string::npos);
    CHECK(r.out.find("4/5 rows pass\n") != std::string::npos);
    r = invoke({"table"});
    CHECK(r.out.rfind("n_2\tz\tm_z(t)\n2\t", 0) == 0);
    const auto j = Json::parse(invoke({"table", "--verify", "--json"}).out);
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() == 5);
}

TEST_CASE("cyclotomic, tensor and bigsearch") {
    auto r = invoke({"cyclotomic", "--r", "7", "--p", "2"});
    CHECK(r.out ==
          "Phi_7 over F_2: 2 factors of degree 3, 1 big\n"
          "  t^3+t^2+1  big\n"
          "  t^3+t+1  small\n");
    CHECK(invoke({"cyclotomic", "--r", "2", "--p", "2"}).code == 2);
    r = invoke({"tensor", "--a", "t^2+t+1", "--b", "t^3+t^2+1", "--p", "2", "--json"});
    const auto j = Json::parse(r.out);
    CHECK(j["degree"] == 6);
    CHECK(j["big"] == true);
    r = invoke({"bigsearch", "--e", "4"});
    CHECK(r.out == "polynomial: t^4+t^3+1\n");
    CHECK(invoke({"bigsearch", "--e", "20", "--budget", "1"}).code == 2);
}
