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

#include "as90/bigpoly.hpp"

#include <algorithm>

#include "as90/error.hpp"
#include "as90/field.hpp"
#include "as90/linalg.hpp"
#include "as90/periodicity.hpp"

namespace as90::bigpoly {

BigClass classify(const PrimePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial is neither big nor small");
    const int d = f.degree();
    const u64 sub = d == 0 ? 0 : f.coeff(d - 1);
    const Size value = (d == 0 || sub != 0) ? Size::big : Size::small;
    return {value, d, f.leading(), sub};
}

bool is_big(const PrimePoly& f) { return classify(f).value == Size::big; }

unsigned ord_mod(u64 r, u64 p) {
    if (!is_prime(r)) throw Error(ErrorCode::NotPrime, std::to_string(r) + " is not prime");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (r == p) throw Error(ErrorCode::EqualPrimes, "Ord_r(p) needs r != p");
    const u64 base = p % r;
    u64 acc = base;
    unsigned e = 1;
    while (acc != 1) {
        acc = mul_mod(acc, base, r);
        ++e;
    }
    return e;
}

PrimePoly cyclotomic_prime(u64 r, u64 p) {
    if (!is_prime(r)) throw Error(ErrorCode::NotPrime, std::to_string(r) + " is not prime");
    if (r == p) throw Error(ErrorCode::EqualPrimes, "Phi_r over F_r is (t-1)^(r-1), not handled");
    return PrimePoly(p, std::vector<u64>(r, 1));
}

PrimePoly cyclotomic(u64 m, u64 p) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "Phi_0 is undefined");
    PrimePoly out = PrimePoly::monomial(p, static_cast<unsigned>(m)) - PrimePoly::constant(p, 1);
    for (u64 d : divisors(m)) {
        if (d != m) out = out / cyclotomic(d, p);
    }
    return out;
}

std::vector<PrimePoly> factor_cyclotomic(u64 r, u64 p) {
    std::vector<PrimePoly> out;
    for (auto& pf : factor(cyclotomic_prime(r, p))) out.push_back(std::move(pf.factor));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

PrimePoly tensor_product(const PrimePoly& a, const PrimePoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "tensor product with zero");
    if (a.p() != b.p()) throw Error(ErrorCode::InvalidArgument, "polynomials over different prime fields");
    const u64 p = a.p();
    const auto m = static_cast<unsigned>(a.degree());
    const auto n = static_cast<unsigned>(b.degree());
    const u64 lead = mul_mod(pow_mod(a.leading(), n, p), pow_mod(b.leading(), m, p), p);
    if (m == 0 || n == 0) return PrimePoly::constant(p, lead);
    const PrimeMatrix k = kronecker(PrimeMatrix::companion(a.monic()), PrimeMatrix::companion(b.monic()));
    return characteristic_polynomial(k).scaled(lead);
}

PrimePoly find_big_primitive(unsigned e, u64 p, u64 budget) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    const auto size = checked_pow(p, e);
    if (!size) throw Error(ErrorCode::FieldTooLarge, "p^e exceeds 2^64");
    const auto group = factor(*size - 1);

    // coeffs[0] and coeffs[e-1] range over 1..p-1, the rest over 0..p-1.
    // Digit e-1 is least significant so candidates come out in lex order.
    std::vector<u64> coeffs(e + 1, 0);
    coeffs[e] = 1;
    coeffs[0] = 1;
    coeffs[e - 1] = 1;
    auto low = [&](unsigned i) -> u64 { return (i == 0 || i == e - 1) ? 1 : 0; };

    for (u64 tested = 0; tested < budget; ++tested) {
        const PrimePoly f(p, coeffs);
        if (is_irreducible(f)) {
            const auto ctx = FieldCtx::make(p, e, f);
            if (element_order(ctx.generator(), group) == *size - 1) return f;
        }
        int i = static_cast<int>(e) - 1;
        while (i >= 0 && ++coeffs[i] == p) {
            coeffs[i] = low(static_cast<unsigned>(i));
            --i;
        }
        if (i < 0) break;
    }
    throw Error(ErrorCode::NotFound, "no big primitive polynomial of degree " + std::to_string(e) +
                                         " within a budget of " + std::to_string(budget));
}

u64 root_trace(const PrimePoly& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root trace needs a positive degree");
    const PrimePoly g = f.monic();
    return neg_mod(g.coeff(static_cast<std::size_t>(g.degree() - 1)), g.p());
}

bool TableReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.pass; });
}

TableReport verify_table_entry(unsigned n2, const PrimePoly& candidate) {
    TableReport report{n2, candidate, {}};
    auto add = [&](const char* name, bool ok) { report.checks.push_back({name, ok}); };
    const bool degree_ok = candidate.p() == 2 && candidate.degree() == static_cast<int>(n2);
    add("degree", degree_ok);
    const bool irreducible = degree_ok && is_irreducible(candidate);
    add("irreducible", irreducible);
    add("big", !candidate.is_zero() && is_big(candidate));
    if (!irreducible) {
        add("order", false);
        add("trace", false);
        add("period", false);
        return report;
    }
    const auto ctx = FieldCtx::make(2, n2, candidate);
    const FieldElem z = ctx.generator();
    add("order", element_order(z) == ctx.group_order());
    const bool trace_one = trace(z, 1).is_one();
    add("trace", trace_one);
    add("period", trace_one && periodicity::build_sequence(z).period == 2 * u64{n2});
    return report;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        {2, "omega", parse_poly("t^2+t+1", 2)},
        {4, "alpha", parse_poly("t^4+t^3+1", 2)},
        {8, "beta", parse_poly("t^8+t^7+t^2+t+1", 2)},
        {16, "gamma", parse_poly("t^16+t^15+t^4+t+1", 2)},
        {32, "delta", parse_poly("t^32+t^31+t^3+t+1", 2)},
    };
    return rows;
}

const std::vector<TableRow>& printed_table_rows() {
    static const std::vector<TableRow> rows = [] {
        auto out = table_rows();
        out[3].poly = parse_poly("t^16+t^15+t^8+t+1", 2);
        return out;
    }();
    return rows;
}

const PrimePoly& table_polynomial(unsigned n2) {
    for (const auto& row : table_rows()) {
        if (row.n2 == n2) return row.poly;
    }
    throw Error(ErrorCode::NotFound, "no table entry for n_2 = " + std::to_string(n2));
}

std::string format_table(const std::vector<TableRow>& rows) {
    std::string out = "n_2\tz\tm_z(t)\n";
    for (const auto& row : rows) out += std::to_string(row.n2) + "\t" + row.symbol + "\t" + to_string(row.poly) + "\n";
    return out;
}

std::vector<TableRow> regenerate_table(u64 budget) {
    std::vector<TableRow> out;
    for (const auto& row : table_rows()) out.push_back({row.n2, row.symbol, find_big_primitive(row.n2, 2, budget)});
    return out;
}

}  // namespace as90::bigpoly
