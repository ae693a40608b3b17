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
#include <map>
#include <mutex>
#include <stdexcept>

#include "as90/bigpoly.hpp"
#include "as90/error.hpp"
#include "as90/ext_poly.hpp"
#include "as90/linalg.hpp"
#include "as90/periodicity.hpp"

namespace as90::artin_schreier {

Instance::Instance(FieldCtx c, FieldElem v) : ctx(std::move(c)), y(std::move(v)) {
    if (!(y.ctx() == ctx)) throw Error(ErrorCode::CtxMismatch, "y does not belong to the instance context");
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::coprime: return "coprime";
        case Method::table: return "table";
        case Method::prime_r: return "prime_r";
        case Method::p2mod3: return "p2mod3";
        case Method::np_p: return "np_p";
        case Method::general: return "general";
        case Method::brute: return "brute";
    }
    return "unknown";
}

std::vector<FieldElem> RootSet::roots() const {
    std::vector<FieldElem> out;
    for (const auto& u : subfield_elements(base_root.ctx(), base_root.ctx().f())) out.push_back(base_root + u);
    std::sort(out.begin(), out.end());
    return out;
}

bool RootSet::contains(const FieldElem& r) const { return in_subfield(r - base_root, base_root.ctx().f()); }

bool has_root(const Instance& inst) { return trace_to_base(inst.y).is_zero(); }

namespace {

void require_root(const Instance& inst) {
    if (!has_root(inst)) {
        throw Error(ErrorCode::NoRoot, "Tr(y) = " + to_string(trace_to_base(inst.y)) + " is nonzero, so t^q-t-y has no root");
    }
}

void require_prime_base(const Instance& inst, std::string_view what) {
    if (inst.ctx.f() != 1) {
        throw Error(ErrorCode::WrongNpCase, std::string(what) + " needs the prime field as base (f = 1)");
    }
}

/// Sum c_i sigma^i(y), checked against the defining equation.
RootSet assemble(const Instance& inst, std::vector<FieldElem> coeffs, Method method, u64 period, std::string note) {
    FieldElem x = inst.ctx.zero();
    FieldElem conj = inst.y;
    for (const auto& c : coeffs) {
        x += c * conj;
        conj = frobenius(conj, 1);
    }
    if (!(frobenius(x, 1) - x == inst.y)) {
        throw std::logic_error("root formula '" + std::string(to_string(method)) + "' failed verification");
    }
    return {inst.y, std::move(x), inst.ctx.q(), method, std::move(coeffs), period, std::move(note)};
}

/// Coefficients are the partial traces of z.
RootSet from_witness(const Instance& inst, const FieldElem& z, Method method, std::string note) {
    auto coeffs = hilbert90::partial_trace_sequence(z, inst.ctx.relative_degree());
    const u64 period = periodicity::build_sequence(z).period;
    return assemble(inst, std::move(coeffs), method, period, std::move(note));
}

}  // namespace

RootSet root_general(const Instance& inst, std::optional<hilbert90::TraceOneWitness> witness) {
    require_root(inst);
    if (!witness) witness = hilbert90::find_trace_one(inst.ctx);
    const auto cert = hilbert90::r_form(inst.y, witness->z);
    RootSet out = from_witness(inst, witness->z, Method::general,
                               "z=" + as90::to_string(witness->z) + " e=" + std::to_string(witness->e) + " (" +
                                   witness->provenance + ")");
    if (!cert.checked || !(cert.x == out.base_root)) throw std::logic_error("R(y, z) certificate mismatch");
    return out;
}

RootSet root_coprime(const Instance& inst) {
    const u64 p = inst.ctx.p();
    const unsigned rel = inst.ctx.relative_degree();
    if (rel % p == 0) {
        throw Error(ErrorCode::WrongNpCase, "coprime formula needs p = " + std::to_string(p) + " not dividing |E:F| = " +
                                                std::to_string(rel));
    }
    require_root(inst);
    const u64 n_inv = inv_mod(rel % p, p);
    auto coefficient = [&](u64 i) { return inst.ctx.scalar(mul_mod(i % p, n_inv, p)); };
    std::vector<FieldElem> coeffs;
    for (unsigned i = 0; i < rel; ++i) coeffs.push_back(coefficient(i));
    std::vector<FieldElem> longer;
    for (u64 i = 0; i < 2 * p; ++i) longer.push_back(coefficient(i));
    const u64 period = periodicity::period_dividing(longer, p);
    return assemble(inst, std::move(coeffs), Method::coprime, period, "z=1/" + std::to_string(rel));
}

FieldElem find_zeta(u64 p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (!checked_pow(p, static_cast<unsigned>(p))) {
        throw Error(ErrorCode::FieldTooLarge, "GF(p^p) exceeds 2^64 for p = " + std::to_string(p));
    }
    std::vector<u64> coeffs(p + 1, 0);
    coeffs[0] = 1;
    coeffs[p - 1] = neg_mod(1, p);
    coeffs[p] = 1;
    return FieldCtx::make(p, static_cast<unsigned>(p), PrimePoly(p, std::move(coeffs))).generator();
}

RootSet root_np_p(const Instance& inst) {
    require_prime_base(inst, "the n_p = p formula");
    const u64 p = inst.ctx.p();
    const unsigned n = inst.ctx.n();
    if (hilbert90::p_part(n, p).n_p != p) {
        throw Error(ErrorCode::WrongNpCase, "n_p = p formula needs p || n, got n = " + std::to_string(n));
    }
    require_root(inst);
    const FieldElem zeta_src = find_zeta(p);
    const FieldElem zeta = SubfieldEmbedding(zeta_src.ctx(), inst.ctx)(zeta_src);
    const u64 scale = inv_mod((n / p) % p, p);
    return from_witness(inst, zeta.scaled(scale), Method::np_p,
                        "zeta root of " + as90::to_string(zeta_src.ctx().modulus()) + ", scale (n/p)^-1=" +
                            std::to_string(scale));
}

RootSet root_via_prime_r(const Instance& inst, u64 r) {
    require_prime_base(inst, "the prime-r formula");
    const u64 p = inst.ctx.p();
    const unsigned n = inst.ctx.n();
    const unsigned e = bigpoly::ord_mod(r, p);
    if (n % e != 0 || (n / e) % p == 0) {
        throw Error(ErrorCode::BadOrder, "prime-r formula needs e = Ord_" + std::to_string(r) + "(" + std::to_string(p) +
                                             ") = " + std::to_string(e) + " dividing n = " + std::to_string(n) +
                                             " with p not dividing n/e");
    }
    require_root(inst);
    const auto factors = bigpoly::factor_cyclotomic(r, p);
    const auto big = std::find_if(factors.begin(), factors.end(), bigpoly::is_big);
    if (big == factors.end()) throw std::logic_error("cyclotomic polynomial without a big factor");
    const FieldElem zeta = find_roots(*big, inst.ctx).front();
    const u64 tau = bigpoly::root_trace(*big);
    const u64 scale = inv_mod(mul_mod((n / e) % p, tau, p), p);
    const FieldElem z = zeta.scaled(scale);
    RootSet out = from_witness(inst, z, Method::prime_r,
                               "r=" + std::to_string(r) + " e=" + std::to_string(e) + " zeta root of " +
                                   as90::to_string(*big) + " tau=" + std::to_string(tau));
    if (out.coefficient_period != e * p || e % hilbert90::p_part(n, p).n_p != 0) {
        throw std::logic_error("prime-r partial traces do not have period e*p");
    }
    return out;
}

RootSet root_p2mod3(const Instance& inst) {
    require_prime_base(inst, "the p = 2 mod 3 formula");
    const u64 p = inst.ctx.p();
    const unsigned n = inst.ctx.n();
    if (p % 3 != 2 || n % 2 != 0) {
        throw Error(ErrorCode::WrongCongruence, "p = 2 mod 3 formula needs p = 2 mod 3 and n even, got p = " +
                                                    std::to_string(p) + ", n = " + std::to_string(n));
    }
    if ((n / 2) % p == 0) {
        throw Error(ErrorCode::WrongNpCase, "p = 2 mod 3 formula needs p not dividing n/2 = " + std::to_string(n / 2));
    }
    require_root(inst);
    const FieldElem omega = find_roots(parse_poly("t^2+t+1", p), inst.ctx).front();
    const u64 half_inv = inv_mod((n / 2) % p, p);
    // Statement form (n/2)^{-1}(floor(i/2) - r_i w); the other variant is its negative.
    auto coefficient = [&](u64 i, bool negate) {
        const u64 r_i = i % 2;
        FieldElem c = inst.ctx.scalar((i / 2) % p) - omega.scaled(r_i);
        c = c.scaled(half_inv);
        return negate ? -c : c;
    };
    std::vector<FieldElem> longer;
    for (u64 i = 0; i < 4 * p; ++i) longer.push_back(coefficient(i, false));
    const u64 period = periodicity::period_dividing(longer, 2 * p);
    for (const bool negate : {false, true}) {
        std::vector<FieldElem> coeffs;
        for (unsigned i = 0; i < n; ++i) coeffs.push_back(coefficient(i, negate));
        try {
            return assemble(inst, std::move(coeffs), Method::p2mod3, period,
                            std::string("sign=") + (negate ? "proof" : "statement") + " omega=" + as90::to_string(omega));
        } catch (const std::logic_error&) {
            // try the other sign
        }
    }
    throw std::logic_error("neither sign variant of the p = 2 mod 3 formula verified");
}

const std::vector<std::optional<u64>>& table_exponents(unsigned n2) {
    static const std::map<unsigned, std::vector<std::optional<u64>>> stored = {
        {4, {std::nullopt, 1, 13, 6}},
        {8, {std::nullopt, 1, 100, 189, 29, 60, 154, 177}},
        {16,
         {std::nullopt, 1, 64409, 48754, 27742, 48469, 1146, 22404, 64313, 47682, 63219, 45929, 55680, 46875, 7495,
          32204}},
    };
    const auto it = stored.find(n2);
    if (it == stored.end()) throw Error(ErrorCode::NotFound, "no stored exponents for n_2 = " + std::to_string(n2));
    return it->second;
}

std::vector<std::optional<u64>> compute_exponents(unsigned n2) {
    const auto ctx = FieldCtx::make(2, n2, bigpoly::table_polynomial(n2));
    const FieldElem z = ctx.generator();
    std::vector<std::optional<u64>> out;
    for (const auto& x : hilbert90::partial_trace_sequence(z, n2)) {
        out.push_back(x.is_zero() ? std::nullopt : std::optional<u64>(discrete_log(z, x)));
    }
    return out;
}

namespace {

void check_stored_exponents(unsigned n2) {
    static std::mutex mutex;
    static std::map<unsigned, bool> checked;
    if (n2 != 4 && n2 != 8 && n2 != 16) return;
    std::lock_guard lock(mutex);
    if (checked[n2]) return;
    if (compute_exponents(n2) != table_exponents(n2)) {
        throw std::logic_error("stored exponents for n_2 = " + std::to_string(n2) + " disagree with discrete logs");
    }
    checked[n2] = true;
}

}  // namespace

RootSet root_char2_table(const Instance& inst) {
    if (inst.ctx.p() != 2 || inst.ctx.f() != 1) {
        throw Error(ErrorCode::WrongNpCase, "table formula needs p = q = 2");
    }
    const unsigned n = inst.ctx.n();
    const auto n2 = static_cast<unsigned>(hilbert90::p_part(n, 2).n_p);
    if (n2 > 32) throw Error(ErrorCode::UnsupportedTwoPart, "no table entry for n_2 = " + std::to_string(n2));
    require_root(inst);
    if (n2 == 1) return from_witness(inst, inst.ctx.one(), Method::table, "n_2=1 z=1");
    const PrimePoly& poly = bigpoly::table_polynomial(n2);
    check_stored_exponents(n2);
    FieldElem z = inst.ctx.generator();
    if (!(inst.ctx.modulus() == poly)) {
        const auto source = FieldCtx::make(2, n2, poly);
        z = SubfieldEmbedding(source, inst.ctx)(source.generator());
    }
    return from_witness(inst, z, Method::table, "n_2=" + std::to_string(n2) + " z root of " + as90::to_string(poly));
}

Factorization factor_artin_schreier(const Instance& inst) {
    const u64 p = inst.ctx.p();
    const u64 q = inst.ctx.q();
    if (!has_root(inst)) {
        if (q == p) return {Outcome::irreducible, std::nullopt, "irreducible: Tr(y) != 0 and q = p"};
        return {Outcome::undetermined, std::nullopt, "no root; irreducibility undetermined"};
    }
    const unsigned n = inst.ctx.n();
    const unsigned rel = inst.ctx.relative_degree();
    const bool prime_base = inst.ctx.f() == 1;
    RootSet roots = [&] {
        if (rel % p != 0) return root_coprime(inst);
        if (p == 2 && prime_base && hilbert90::p_part(n, 2).n_p <= 32) return root_char2_table(inst);
        if (prime_base && p % 3 == 2 && n % 2 == 0 && (n / 2) % p != 0) return root_p2mod3(inst);
        if (prime_base && p <= 13 && hilbert90::p_part(n, p).n_p == p) return root_np_p(inst);
        return root_general(inst);
    }();
    std::string report = "split: " + std::to_string(q) + " roots x+u, u in GF(" + std::to_string(q) + ")";
    return {Outcome::split, std::move(roots), std::move(report)};
}

std::vector<FieldElem> brute_force_roots(const Instance& inst, u64 limit) {
    const FieldCtx& ctx = inst.ctx;
    const auto size = checked_pow(ctx.p(), ctx.n());
    if (!size || *size > limit) {
        throw Error(ErrorCode::FieldTooLarge, "exhaustive scan limited to " + std::to_string(limit) + " elements");
    }
    const u64 q = ctx.q();
    std::vector<FieldElem> out;
    std::vector<u64> digits(ctx.n(), 0);
    for (u64 idx = 0; idx < *size; ++idx) {
        const FieldElem r = ctx.element(digits);
        if (pow(r, q) - r == inst.y) out.push_back(r);
        for (auto& d : digits) {
            if (++d < ctx.p()) break;
            d = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_root_space(const FieldElem& r, const FieldElem& y) {
    const FieldCtx& ctx = y.ctx();
    std::vector<FieldElem> columns = subfield_basis(ctx, ctx.f());
    FieldElem conj = y;
    for (unsigned i = 0; i < ctx.relative_degree(); ++i) {
        columns.push_back(conj);
        conj = frobenius(conj, 1);
    }
    PrimeMatrix m(ctx.p(), ctx.n(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t row = 0; row < ctx.n(); ++row) m(row, c) = columns[c].coeffs()[row];
    }
    return solve(m, std::vector<u64>(r.coeffs().begin(), r.coeffs().end())).has_value();
}

}  // namespace as90::artin_schreier
