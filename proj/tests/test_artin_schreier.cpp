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

#include "as90/artin_schreier.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "as90/bigpoly.hpp"
#include "as90/ext_poly.hpp"
#include "as90/periodicity.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace as90;
using namespace as90::artin_schreier;
using namespace as90::testing;

namespace {

Instance inst_of(const FieldElem& y) { return Instance(y.ctx(), y); }

// r^q - r = y over all of E, with plain exponentiation.
std::vector<FieldElem> scan_roots(const FieldElem& y) {
    std::vector<FieldElem> out;
    for (const auto& r : all_elements(y.ctx())) {
        if (naive_power(r, y.ctx().q()) - r == y) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool differ_by_base(const FieldElem& a, const FieldElem& b) { return pow(a - b, a.ctx().q()) == a - b; }

void check_root(const RootSet& rs) {
    const FieldElem& x = rs.base_root;
    CHECK(naive_power(x, x.ctx().q()) - x == rs.y);
}

}  // namespace

TEST_CASE("root existence") {
    const auto f4 = FieldCtx::make(2, 2);
    CHECK(has_root(inst_of(f4.zero())));
    CHECK_FALSE(has_root(inst_of(f4.with_step(2).one())));
    const auto f8 = FieldCtx::make(2, 3);
    CHECK(has_root(inst_of(f8.parse("t+t^2"))));
    CHECK(error_code_of([&] { Instance(f4, f8.one()); }) == ErrorCode::CtxMismatch);

    auto rng = make_rng(61);
    for (auto ctx : {FieldCtx::make(3, 3), FieldCtx::make(2, 6, std::nullopt, 2), FieldCtx::make(5, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto y = ctx.random(rng);
            const auto roots = scan_roots(y);
            CHECK(has_root(inst_of(y)) == !roots.empty());
            CHECK((roots.empty() || roots.size() == ctx.q()));
        }
    }
}

TEST_CASE("general formula") {
    const auto f64 = FieldCtx::make(2, 6);
    const auto zero = root_general(inst_of(f64.zero()));
    CHECK(zero.base_root.is_zero());

    // With z = omega the coefficients cycle 0, w, 1, w^2.
    const auto w = find_roots(parse_poly("t^2+t+1", 2), f64).front();
    const hilbert90::TraceOneWitness witness{w, 2, "given"};
    auto rng = make_rng(67);
    const auto y = random_trace_zero(f64, rng);
    const auto rs = root_general(inst_of(y), witness);
    const std::vector<FieldElem> cycle{f64.zero(), w, f64.one(), w * w, f64.zero(), w};
    CHECK(rs.coefficients == cycle);
    CHECK(rs.coefficient_period == 4);
    check_root(rs);

    CHECK(error_code_of([&] { root_general(inst_of(w)); }) == ErrorCode::NoRoot);
}

TEST_CASE("coprime formula") {
    const auto f8 = FieldCtx::make(2, 3);
    const auto y = f8.parse("t+t^2");
    const auto rs = root_coprime(inst_of(y));
    CHECK(rs.base_root == y * y);
    CHECK(rs.method == Method::coprime);
    CHECK(rs.coefficient_period == 2);

    // p = 3, n = 4: 1/4 = 1, so x = 0 y + 1 y^3 + 2 y^9 + 0 y^27.
    const auto f81 = FieldCtx::make(3, 4);
    auto rng = make_rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const auto y81 = random_trace_zero(f81, rng);
        const auto rs81 = root_coprime(inst_of(y81));
        CHECK(rs81.base_root == naive_power(y81, 3) + naive_power(y81, 9).scaled(2));
        CHECK(rs81.coefficient_period == 3);
        check_root(rs81);
    }
    CHECK(root_coprime(inst_of(f81.zero())).base_root.is_zero());
    CHECK(error_code_of([] { root_coprime(inst_of(FieldCtx::make(3, 3).zero())); }) == ErrorCode::WrongNpCase);
}

TEST_CASE("zeta") {
    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        const auto zeta = find_zeta(p);
        const auto& ctx = zeta.ctx();
        CHECK(ctx.n() == p);
        CHECK((pow(zeta, p) - pow(zeta, p - 1) + ctx.one()).is_zero());
        CHECK(trace(zeta, 1).is_one());
        CHECK(pow(zeta, ctx.group_order()).is_one());
        if (p <= 5) CHECK(irreducible_by_trial_division(ctx.modulus()));
    }
    const auto w = find_zeta(2);
    CHECK(w * w + w + w.ctx().one() == w.ctx().zero());
    CHECK(error_code_of([] { find_zeta(17); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("n_p = p formula") {
    const auto f4 = FieldCtx::make(2, 2);
    const auto rs = root_np_p(inst_of(f4.one()));
    CHECK(rs.base_root * rs.base_root + rs.base_root == f4.one());
    CHECK(rs.base_root == f4.generator());

    auto rng = make_rng(73);
    const auto f64 = FieldCtx::make(2, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const auto y = random_trace_zero(f64, rng);
        CHECK(differ_by_base(root_np_p(inst_of(y)).base_root, root_general(inst_of(y)).base_root));
    }
    const auto f27 = FieldCtx::make(3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto y = random_trace_zero(f27, rng);
        const auto rs27 = root_np_p(inst_of(y));
        check_root(rs27);
        const auto roots = scan_roots(y);
        CHECK(std::find(roots.begin(), roots.end(), rs27.base_root) != roots.end());
    }
    CHECK(error_code_of([] { root_np_p(inst_of(FieldCtx::make(2, 4).zero())); }) == ErrorCode::WrongNpCase);
    CHECK(error_code_of([] { root_np_p(inst_of(FieldCtx::make(2, 4, std::nullopt, 2).zero())); }) ==
          ErrorCode::WrongNpCase);
}

TEST_CASE("prime r formula") {
    auto rng = make_rng(79);
    SUBCASE("r = 3 reduces to the cube root of unity") {
        const auto ctx = FieldCtx::make(2, 6);
        const auto y = random_trace_zero(ctx, rng);
        const auto rs = root_via_prime_r(inst_of(y), 3);
        CHECK(rs.note.find("tau=1") != std::string::npos);
        CHECK(rs.coefficient_period == 4);
        CHECK(differ_by_base(rs.base_root, root_general(inst_of(y)).base_root));
    }
    SUBCASE("r = 7 over F_2") {
        // Ord_7(2) = 3 divides 12, but 2 | 12/3, so n = 12 is outside the hypotheses.
        CHECK(error_code_of([&] { root_via_prime_r(inst_of(FieldCtx::make(2, 12).zero()), 7); }) ==
              ErrorCode::BadOrder);
        for (unsigned n : {3u, 9u}) {
            const auto ctx = FieldCtx::make(2, n);
            for (int trial = 0; trial < 5; ++trial) {
                const auto y = random_trace_zero(ctx, rng);
                const auto rs = root_via_prime_r(inst_of(y), 7);
                CHECK(rs.note.find("t^3+t^2+1") != std::string::npos);
                CHECK(rs.note.find("tau=1") != std::string::npos);
                CHECK(rs.coefficient_period == 6);
                check_root(rs);
            }
        }
    }
    SUBCASE("r = 5 over F_3") {
        const auto ctx = FieldCtx::make(3, 8);
        for (int trial = 0; trial < 3; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            const auto rs = root_via_prime_r(inst_of(y), 5);
            CHECK(rs.coefficient_period == 12);
            check_root(rs);
        }
    }
    SUBCASE("preconditions") {
        CHECK(error_code_of([] { root_via_prime_r(inst_of(FieldCtx::make(2, 4).zero()), 7); }) == ErrorCode::BadOrder);
        CHECK(error_code_of([] { root_via_prime_r(inst_of(FieldCtx::make(2, 4).zero()), 2); }) ==
              ErrorCode::EqualPrimes);
        CHECK(error_code_of([] { root_via_prime_r(inst_of(FieldCtx::make(2, 3).one()), 7); }) == ErrorCode::NoRoot);
    }
}

TEST_CASE("p = 2 mod 3 formula") {
    auto rng = make_rng(83);
    SUBCASE("characteristic 2") {
        const auto ctx = FieldCtx::make(2, 6);
        const auto y = random_trace_zero(ctx, rng);
        const auto rs = root_p2mod3(inst_of(y));
        const auto w = find_roots(parse_poly("t^2+t+1", 2), ctx).front();
        const std::vector<FieldElem> cycle{ctx.zero(), w, ctx.one(), w * w, ctx.zero(), w};
        CHECK(rs.coefficients == cycle);
        CHECK(rs.coefficient_period == 4);
    }
    SUBCASE("p = 5 against exhaustive roots") {
        const auto ctx = FieldCtx::make(5, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            const auto rs = root_p2mod3(inst_of(y));
            const auto roots = scan_roots(y);
            CHECK(std::find(roots.begin(), roots.end(), rs.base_root) != roots.end());
            if (!y.is_zero()) CHECK(rs.note.find("sign=statement") != std::string::npos);
        }
    }
    SUBCASE("p = 11, n = 4") {
        const auto ctx = FieldCtx::make(11, 4);
        const auto y = random_trace_zero(ctx, rng);
        const auto rs = root_p2mod3(inst_of(y));
        CHECK(rs.coefficient_period == 22);
        check_root(rs);
    }
    SUBCASE("preconditions") {
        CHECK(error_code_of([] { root_p2mod3(inst_of(FieldCtx::make(7, 2).zero())); }) == ErrorCode::WrongCongruence);
        CHECK(error_code_of([] { root_p2mod3(inst_of(FieldCtx::make(5, 3).zero())); }) == ErrorCode::WrongCongruence);
        CHECK(error_code_of([] { root_p2mod3(inst_of(FieldCtx::make(5, 10).zero())); }) == ErrorCode::WrongNpCase);
    }
}

TEST_CASE("table exponents") {
    const std::vector<std::optional<u64>> alpha{std::nullopt, 1, 13, 6};
    CHECK(table_exponents(4) == alpha);
    CHECK(compute_exponents(4) == alpha);
    const std::vector<std::optional<u64>> beta{std::nullopt, 1, 100, 189, 29, 60, 154, 177};
    CHECK(compute_exponents(8) == beta);
    const std::vector<std::optional<u64>> gamma{std::nullopt, 1,     64409, 48754, 27742, 48469, 1146,  22404,
                                                64313,        47682, 63219, 45929, 55680, 46875, 7495,  32204};
    CHECK(compute_exponents(16) == gamma);
    CHECK(error_code_of([] { table_exponents(32); }) == ErrorCode::NotFound);

    std::ifstream golden(std::string(AS90_GOLDEN_DIR) + "/exponents_n2_32.txt");
    REQUIRE(golden.good());
    std::vector<std::optional<u64>> expected;
    for (std::string line; std::getline(golden, line);) {
        if (line.empty() || line[0] == '#') continue;
        expected.push_back(line == "zero" ? std::nullopt : std::optional<u64>(std::stoull(line)));
    }
    const auto computed = compute_exponents(32);
    CHECK(computed == expected);

    // Round trip through exponentiation and the half-period law.
    const auto ctx = FieldCtx::make(2, 32, bigpoly::table_polynomial(32));
    const auto seq = hilbert90::partial_trace_sequence(ctx.generator(), 64);
    for (std::size_t i = 1; i < 32; ++i) CHECK(pow(ctx.generator(), *computed[i]) == seq[i]);
    for (std::size_t i = 0; i < 32; ++i) CHECK(seq[i + 32] == seq[i] + ctx.one());
}

TEST_CASE("characteristic 2 table formula") {
    auto rng = make_rng(89);
    for (unsigned n : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 16u, 20u, 24u, 32u, 48u}) {
        const auto ctx = FieldCtx::make(2, n);
        const u64 n2 = hilbert90::p_part(n, 2).n_p;
        for (int trial = 0; trial < 3; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            const auto rs = root_char2_table(inst_of(y));
            CHECK(rs.method == Method::table);
            CHECK(rs.coefficient_period == 2 * n2);
            check_root(rs);
            if (n <= 12) CHECK(differ_by_base(rs.base_root, root_general(inst_of(y)).base_root));
        }
    }
    CHECK(error_code_of([] { root_char2_table(inst_of(FieldCtx::make(2, 64).zero())); }) ==
          ErrorCode::UnsupportedTwoPart);
    CHECK(error_code_of([] { root_char2_table(inst_of(FieldCtx::make(3, 2).zero())); }) == ErrorCode::WrongNpCase);
}

TEST_CASE("factorization report") {
    const auto f4 = FieldCtx::make(2, 2);
    auto fac = factor_artin_schreier(inst_of(f4.generator()));
    CHECK(fac.outcome == Outcome::irreducible);
    CHECK(scan_roots(f4.generator()).empty());

    fac = factor_artin_schreier(inst_of(f4.with_step(2).one()));
    CHECK(fac.outcome == Outcome::undetermined);
    CHECK(fac.report == "no root; irreducibility undetermined");
    CHECK_FALSE(fac.roots.has_value());

    const auto f8 = FieldCtx::make(2, 3);
    const auto y = f8.parse("t+t^2");
    fac = factor_artin_schreier(inst_of(y));
    REQUIRE(fac.roots.has_value());
    const auto roots = fac.roots->roots();
    CHECK(roots.size() == 2);
    std::vector<FieldElem> expected{fac.roots->base_root, fac.roots->base_root + f8.one()};
    std::sort(expected.begin(), expected.end());
    CHECK(roots == expected);
    CHECK(roots == scan_roots(y));

    // Method selection follows the documented order.
    auto method_for = [](u64 p, unsigned n, unsigned f) {
        return factor_artin_schreier(inst_of(FieldCtx::make(p, n, std::nullopt, f).zero())).roots->method;
    };
    CHECK(method_for(2, 5, 1) == Method::coprime);
    CHECK(method_for(2, 6, 1) == Method::table);
    CHECK(method_for(5, 2, 1) == Method::coprime);
    CHECK(method_for(3, 3, 1) == Method::np_p);
    CHECK(method_for(3, 9, 1) == Method::general);
    CHECK(method_for(2, 4, 2) == Method::general);
}

TEST_CASE("exhaustive roots") {
    const auto f4 = FieldCtx::make(2, 2);
    CHECK(brute_force_roots(inst_of(f4.zero())) == std::vector<FieldElem>{f4.zero(), f4.one()});
    const auto f16 = FieldCtx::make(2, 4, std::nullopt, 2);
    auto rng = make_rng(97);
    const auto y = random_trace_zero(f16, rng);
    CHECK(brute_force_roots(inst_of(y)).size() == 4);
    CHECK(error_code_of([] { brute_force_roots(inst_of(FieldCtx::make(2, 30).zero()), 1 << 20); }) ==
          ErrorCode::FieldTooLarge);

    for (auto ctx : {FieldCtx::make(3, 4), FieldCtx::make(2, 8, std::nullopt, 4), FieldCtx::make(7, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = ctx.random(rng);
            const auto roots = brute_force_roots(inst_of(v));
            CHECK((roots.empty() || roots.size() == ctx.q()));
            CHECK(roots.empty() == !has_root(inst_of(v)));
            if (!roots.empty()) CHECK(roots == root_general(inst_of(v)).roots());
        }
    }
}

TEST_CASE("root space") {
    auto rng = make_rng(101);
    for (auto ctx : {FieldCtx::make(2, 5), FieldCtx::make(3, 4), FieldCtx::make(5, 3), FieldCtx::make(2, 6, std::nullopt, 2)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto y = random_trace_zero(ctx, rng);
            for (const auto& r : brute_force_roots(inst_of(y))) CHECK(in_root_space(r, y));
        }
    }
}
