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

#include "as90/hilbert90.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"

using namespace as90;
using namespace as90::hilbert90;
using namespace as90::testing;

namespace {

// Tr^E_F by summing q-th powers computed with plain exponentiation.
FieldElem slow_trace(const FieldElem& a) {
    FieldElem acc = a;
    FieldElem c = a;
    for (unsigned i = 1; i < a.ctx().relative_degree(); ++i) {
        c = pow(c, a.ctx().q());
        acc += c;
    }
    return acc;
}

// Every r in E with r^q - r = y, by scanning.
std::vector<FieldElem> scan_roots(const FieldElem& y) {
    std::vector<FieldElem> out;
    for (const auto& r : all_elements(y.ctx())) {
        if (pow(r, y.ctx().q()) - r == y) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("p-part") {
    CHECK(p_part(12, 2) == PPart{4, 3});
    CHECK(p_part(9, 2) == PPart{1, 9});
    CHECK(p_part(18, 3) == PPart{9, 2});
    CHECK(p_part(1, 5) == PPart{1, 1});
    CHECK(error_code_of([] { p_part(0, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("trace-one witnesses") {
    SUBCASE("odd degree over F_2 gives z = 1") {
        const auto w = find_trace_one(FieldCtx::make(2, 3));
        CHECK(w.z.is_one());
        CHECK(w.e == 1);
        CHECK(w.provenance == "deterministic-subfield");
    }
    SUBCASE("n_p = 2 lands on a cube root of unity") {
        const auto ctx = FieldCtx::make(2, 6);
        const auto w = find_trace_one(ctx);
        CHECK(w.e == 2);
        CHECK(w.z * w.z + w.z + ctx.one() == ctx.zero());
        CHECK(slow_trace(w.z).is_one());
    }
    SUBCASE("n_p = 4 in F_16") {
        const auto ctx = FieldCtx::make(2, 4, parse_poly("t^4+t^3+1", 2));
        const auto w = find_trace_one(ctx);
        CHECK(w.e == 4);
        CHECK(slow_trace(w.z).is_one());
        CHECK(slow_trace(ctx.generator()).is_one());
    }
    SUBCASE("prescribed degrees and the random path") {
        const auto ctx = FieldCtx::make(2, 12);
        for (unsigned e : {4u, 12u}) {
            for (auto method : {WitnessMethod::deterministic, WitnessMethod::random}) {
                for (u64 seed = 0; seed < 5; ++seed) {
                    const auto w = find_trace_one(ctx, e, method, seed);
                    CHECK(w.e == e);
                    CHECK(degree_over(w.z, 1) == e);
                    CHECK(slow_trace(w.z).is_one());
                }
            }
        }
        CHECK(find_trace_one(ctx, 4, WitnessMethod::random, 3).provenance == "random-scaled");
        CHECK(find_trace_one(ctx, 4, WitnessMethod::random, 3).z == find_trace_one(ctx, 4, WitnessMethod::random, 3).z);
    }
    SUBCASE("relative extensions") {
        const auto ctx = FieldCtx::make(3, 6, std::nullopt, 2);  // |E:F| = 3, n_p = 3
        const auto w = find_trace_one(ctx);
        CHECK(w.e == 3);
        CHECK(slow_trace(w.z).is_one());
    }
    SUBCASE("degrees without a witness") {
        const auto ctx = FieldCtx::make(2, 4);
        CHECK(error_code_of([&] { find_trace_one(ctx, 2); }) == ErrorCode::NoSuchDegree);
        CHECK(error_code_of([&] { find_trace_one(ctx, 3); }) == ErrorCode::NoSuchDegree);
        CHECK(error_code_of([&] { find_trace_one(FieldCtx::make(3, 6), 2); }) == ErrorCode::NoSuchDegree);
    }
}

TEST_CASE("partial trace sequences") {
    const auto f4 = FieldCtx::make(2, 2);
    const auto w = f4.generator();
    const auto seq = partial_trace_sequence(w, 8);
    const std::vector<FieldElem> expected{f4.zero(), w, f4.one(), w * w, f4.zero(), w, f4.one(), w * w};
    CHECK(seq == expected);

    const auto f5 = FieldCtx::make(5, 1);
    const auto ones = partial_trace_sequence(f5.one(), 12);
    for (u64 i = 0; i < 12; ++i) CHECK(ones[i] == f5.scalar(i % 5));

    const auto f16 = FieldCtx::make(2, 4, parse_poly("t^4+t^3+1", 2));
    const auto alpha_seq = partial_trace_sequence(f16.generator(), 9);
    CHECK(alpha_seq[4].is_one());
    CHECK(alpha_seq[8].is_zero());
    CHECK(alpha_seq[2] == naive_power(f16.generator(), 13));
}

TEST_CASE("R(y, z) certificates") {
    SUBCASE("zero cocycle") {
        const auto ctx = FieldCtx::make(3, 4);
        const auto cert = r_form(ctx.zero(), find_trace_one(ctx).z);
        CHECK(cert.x.is_zero());
        CHECK(cert.checked);
    }
    SUBCASE("F_8 with z = 1") {
        const auto ctx = FieldCtx::make(2, 3);
        const auto y = ctx.parse("t+t^2");
        REQUIRE(slow_trace(y).is_zero());
        const auto cert = r_form(y, ctx.one());
        CHECK(cert.x == y * y);
        CHECK(naive_power(y, 4) + y * y == y);
        const auto roots = scan_roots(y);
        CHECK(std::find(roots.begin(), roots.end(), cert.x) != roots.end());
    }
    SUBCASE("F_64 with z = omega against exhaustive roots") {
        const auto ctx = FieldCtx::make(2, 6);
        const auto z = find_trace_one(ctx).z;
        auto rng = make_rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            const auto cert = r_form(y, z);
            CHECK(cert.checked);
            const auto roots = scan_roots(y);
            CHECK(roots.size() == 2);
            CHECK(std::find(roots.begin(), roots.end(), cert.x) != roots.end());
        }
    }
    SUBCASE("root coset and independence of the witness") {
        for (auto ctx : {FieldCtx::make(3, 4), FieldCtx::make(2, 8, std::nullopt, 2), FieldCtx::make(5, 3)}) {
            auto rng = make_rng(ctx.p() * 100 + ctx.n());
            const auto z1 = find_trace_one(ctx).z;
            const auto z2 = find_trace_one(ctx, ctx.relative_degree(), WitnessMethod::random, 7).z;
            for (int trial = 0; trial < 10; ++trial) {
                const auto y = random_trace_zero(ctx, rng);
                const auto x1 = r_form(y, z1).x;
                const auto x2 = r_form(y, z2).x;
                CHECK(pow(x1 - x2, ctx.q()) == x1 - x2);
                std::vector<FieldElem> coset;
                for (const auto& u : all_elements(FieldCtx::make(ctx.p(), ctx.f()))) {
                    coset.push_back(x1 + subfield_embed(u, ctx));
                }
                std::sort(coset.begin(), coset.end());
                CHECK(scan_roots(y) == coset);
            }
        }
    }
    SUBCASE("other generators of the Galois group") {
        const auto ctx = FieldCtx::make(3, 4);
        const auto z = find_trace_one(ctx).z;
        auto rng = make_rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            for (i64 k : {1, 3, -1}) {
                const auto cert = r_form(y, z, k);
                CHECK(cert.checked);
                CHECK(frobenius(cert.x, k) - cert.x == y);
            }
        }
        CHECK(error_code_of([&] { r_form(ctx.zero(), z, 2); }) == ErrorCode::InvalidArgument);
    }
    SUBCASE("trace preconditions") {
        const auto ctx = FieldCtx::make(2, 3);
        CHECK(error_code_of([&] { r_form(ctx.one(), ctx.one()); }) == ErrorCode::TraceNotZero);
        CHECK(error_code_of([&] { r_form(ctx.zero(), ctx.zero()); }) == ErrorCode::TraceNotOne);
        CHECK(error_code_of([&] { r_form(ctx.zero(), FieldCtx::make(2, 2).one()); }) == ErrorCode::CtxMismatch);
    }
    SUBCASE("x_e is the trace of z to its own field") {
        const auto ctx = FieldCtx::make(2, 12);
        for (unsigned e : {4u, 12u}) {
            const auto w = find_trace_one(ctx, e);
            const auto seq = partial_trace_sequence(w.z, e + 1);
            CHECK_FALSE(seq[e].is_zero());
            CHECK(seq[e] == ctx.one());
        }
    }
}

TEST_CASE("R symmetry") {
    const auto f4 = FieldCtx::make(2, 2);
    for (const auto& y : {f4.zero(), f4.one()}) {
        const auto report = r_symmetry_defect(y, f4.generator());
        CHECK(report.defect.is_zero());
        CHECK(report.forward_ok);
        CHECK(report.reverse_ok);
    }
    const auto ctx = FieldCtx::make(3, 4);
    auto rng = make_rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto y = random_trace_zero(ctx, rng);
        auto z = ctx.random(rng);
        while (slow_trace(z).is_zero()) z = ctx.random(rng);
        z = z / slow_trace(z);
        const auto report = r_symmetry_defect(y, z);
        CHECK(report.defect.is_zero());
        CHECK(report.forward_ok);
        CHECK(report.reverse_ok);
    }
}

TEST_CASE("certificate serialization") {
    const auto ctx = FieldCtx::make(2, 3, parse_poly("t^3+t+1", 2));
    const auto cert = r_form(ctx.parse("t^2+t"), ctx.one());
    CHECK(serialize(cert) == "field=" + ctx.describe() + ";y=t^2+t;z=1;x=" + to_string(cert.x) + ";k=1;verified=true");
    CHECK(serialize(cert).find('\n') == std::string::npos);
}
