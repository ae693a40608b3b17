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

#include "as90/periodicity.hpp"

#include "as90/hilbert90.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace as90;
using namespace as90::periodicity;
using namespace as90::testing;

TEST_CASE("sequence period") {
    const auto f4 = FieldCtx::make(2, 2);
    const auto w = f4.generator();
    const std::vector<FieldElem> constant(6, w);
    CHECK(sequence_period(constant, 3) == 1);
    const std::vector<FieldElem> cycle{f4.zero(), w, f4.one(), w * w, f4.zero(), w, f4.one(), w * w};
    CHECK(sequence_period(cycle, 4) == 4);
    CHECK(period_dividing(cycle, 4) == 4);
    CHECK(error_code_of([&] { sequence_period(cycle, 3); }) == ErrorCode::NoPeriodWithinBound);
    CHECK(error_code_of([&] { period_dividing(cycle, 3); }) == ErrorCode::NoPeriodWithinBound);

    const auto f16 = FieldCtx::make(2, 4, parse_poly("t^4+t^3+1", 2));
    const auto seq = hilbert90::partial_trace_sequence(f16.generator(), 16);
    CHECK(sequence_period(seq, 8) == 8);
}

TEST_CASE("period examples") {
    const auto f4 = FieldCtx::make(2, 2);
    auto report = verify_period_theorem(f4.generator());
    CHECK(report.e == 2);
    CHECK(report.period == 4);
    CHECK(report.pass);

    const auto k16 = FieldCtx::make(2, 4, parse_poly("t^4+t^3+1", 2));
    const auto e12 = FieldCtx::make(2, 12);
    const auto z = subfield_embed(k16.generator(), e12);
    report = verify_period_theorem(z);
    CHECK(report.e == 4);
    CHECK(report.n_p == 4);
    CHECK(report.period == 8);
    CHECK(report.interior_nonzero);
    CHECK(report.pass);

    // n_p = 1: z = 1/n lies in the base and x_i = i/n has period p.
    const auto f3 = FieldCtx::make(3, 1);
    report = verify_period_theorem(f3.one());
    CHECK(report.e == 1);
    CHECK(report.period == 3);
    CHECK(report.pass);
    const auto f9 = FieldCtx::make(3, 2);
    report = verify_period_theorem(f9.scalar(2));
    CHECK(report.e == 1);
    CHECK(report.period == 3);
    CHECK(report.pass);

    // In GF(27)/GF(3) the degree is 3 = n_p, so 1 has trace 0.
    const auto f27 = FieldCtx::make(3, 3);
    CHECK(error_code_of([&] { verify_period_theorem(f27.one()); }) == ErrorCode::TraceNotOne);
}

TEST_CASE("period on random witnesses") {
    auto rng = make_rng(43);
    struct Case {
        u64 p;
        unsigned n, f;
    };
    for (const auto& c : std::vector<Case>{{2, 12, 1}, {3, 6, 1}, {3, 6, 2}, {5, 10, 1}, {2, 8, 2}, {7, 7, 1}}) {
        const auto ctx = FieldCtx::make(c.p, c.n, std::nullopt, c.f);
        const unsigned rel = ctx.relative_degree();
        const u64 n_p = hilbert90::p_part(rel, c.p).n_p;
        for (unsigned e = static_cast<unsigned>(n_p); e <= rel; e += static_cast<unsigned>(n_p)) {
            if (rel % e) continue;
            const auto w = hilbert90::find_trace_one(ctx, e, hilbert90::WitnessMethod::random, rng());
            const auto report = verify_period_theorem(w.z);
            CHECK(report.e == e);
            CHECK(report.period == c.p * e);
            CHECK(report.pass);

            // x_{le+j} = l x_e + x_j.
            const auto seq = build_sequence(w.z);
            for (int trial = 0; trial < 10; ++trial) {
                const u64 l = rng() % c.p;
                const u64 j = rng() % e;
                CHECK(seq.terms[l * e + j] == seq.terms[e].scaled(l) + seq.terms[j]);
            }
        }
    }
}

TEST_CASE("report json") {
    const auto f4 = FieldCtx::make(2, 2);
    const auto text = to_json(verify_period_theorem(f4.generator()));
    CHECK(text == R"({"e":2,"n_p":2,"period":4,"pass":true})");
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["period"] == 4);
}
