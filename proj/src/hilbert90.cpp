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

#include <numeric>
#include <random>

#include "as90/error.hpp"

namespace as90::hilbert90 {

PPart p_part(u64 n, u64 p) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "p-part of 0");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    u64 n_p = 1;
    while (n % p == 0) {
        n /= p;
        n_p *= p;
    }
    return {n_p, n};
}

namespace {

constexpr int kRandomDraws = 64;
constexpr u64 kScanLimit = u64{1} << 20;

void require_generator(const FieldCtx& ctx, i64 k) {
    const i64 order = ctx.relative_degree();
    const i64 r = ((k % order) + order) % order;
    if (std::gcd(r, order) != 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "sigma^" + std::to_string(k) + " does not generate a group of order " + std::to_string(order));
    }
}

FieldElem combination(const std::vector<FieldElem>& basis, const std::vector<u64>& digits, const FieldCtx& ctx) {
    FieldElem acc = ctx.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (digits[i] != 0) acc += basis[i].scaled(digits[i]);
    }
    return acc;
}

}  // namespace

TraceOneWitness find_trace_one(const FieldCtx& ctx, std::optional<unsigned> target_e, WitnessMethod method,
                               u64 seed) {
    const unsigned rel = ctx.relative_degree();
    const auto n_p = static_cast<unsigned>(p_part(rel, ctx.p()).n_p);
    const unsigned e = target_e.value_or(n_p);
    if (e == 0 || e % n_p != 0 || rel % e != 0) {
        throw Error(ErrorCode::NoSuchDegree, "no trace-one element of degree " + std::to_string(e) +
                                                 " over the base: need " + std::to_string(n_p) + " | e | " +
                                                 std::to_string(rel));
    }
    const auto basis = subfield_basis(ctx, ctx.f() * e);

    auto accept = [&](const FieldElem& c) -> std::optional<FieldElem> {
        const FieldElem tau = trace_to_base(c);
        if (tau.is_zero() || degree_over_base(c) != e) return std::nullopt;
        return c / tau;
    };

    if (method == WitnessMethod::random) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> coef(0, ctx.p() - 1);
        std::vector<u64> digits(basis.size());
        for (int draw = 0; draw < kRandomDraws; ++draw) {
            for (auto& d : digits) d = coef(rng);
            if (auto z = accept(combination(basis, digits, ctx))) return {*z, e, "random-scaled"};
        }
        throw Error(ErrorCode::RandomRetriesExhausted,
                    "no trace-one element after " + std::to_string(kRandomDraws) + " draws (seed " +
                        std::to_string(seed) + ")");
    }

    std::vector<u64> digits(basis.size(), 0);
    for (u64 step = 0; step < kScanLimit; ++step) {
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == ctx.p()) digits[i++] = 0;
        if (i == digits.size()) break;
        if (auto z = accept(combination(basis, digits, ctx))) return {*z, e, "deterministic-subfield"};
    }
    throw Error(ErrorCode::NotFound, "scan for a trace-one element of degree " + std::to_string(e) + " exhausted");
}

std::vector<FieldElem> partial_trace_sequence(const FieldElem& z, std::size_t length, i64 k) {
    std::vector<FieldElem> out;
    out.reserve(length);
    FieldElem x = z.ctx().zero();
    FieldElem conj = z;
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(x);
        x += conj;
        conj = frobenius(conj, k);
    }
    return out;
}

FieldElem r_raw(const FieldElem& a, const FieldElem& b, i64 k) {
    if (!(a.ctx() == b.ctx())) throw Error(ErrorCode::CtxMismatch, "R(a, b) needs both arguments in one context");
    const FieldCtx& ctx = a.ctx();
    FieldElem x = ctx.zero();
    FieldElem partial = ctx.zero();
    FieldElem b_conj = b;
    FieldElem a_conj = a;
    for (unsigned i = 0; i < ctx.relative_degree(); ++i) {
        x += partial * a_conj;
        partial += b_conj;
        b_conj = frobenius(b_conj, k);
        a_conj = frobenius(a_conj, k);
    }
    return x;
}

RootCertificate r_form(const FieldElem& y, const FieldElem& z, i64 k) {
    if (!(y.ctx() == z.ctx())) throw Error(ErrorCode::CtxMismatch, "y and z live in different contexts");
    require_generator(y.ctx(), k);
    if (!trace_to_base(y).is_zero()) throw Error(ErrorCode::TraceNotZero, "Tr(y) = " + to_string(trace_to_base(y)));
    if (!trace_to_base(z).is_one()) throw Error(ErrorCode::TraceNotOne, "Tr(z) = " + to_string(trace_to_base(z)));
    FieldElem x = r_raw(y, z, k);
    const bool checked = frobenius(x, k) - x == y;
    return {y, z, std::move(x), k, checked};
}

SymmetryReport r_symmetry_defect(const FieldElem& y, const FieldElem& z, i64 k) {
    const RootCertificate forward = r_form(y, z, k);
    const FieldElem reverse = r_raw(z, y, k);
    return {forward.x + reverse + trace_to_base(y * z), forward.checked, reverse - frobenius(reverse, k) == y};
}

std::string serialize(const RootCertificate& cert) {
    return "field=" + cert.y.ctx().describe() + ";y=" + to_string(cert.y) + ";z=" + to_string(cert.z) +
           ";x=" + to_string(cert.x) + ";k=" + std::to_string(cert.k) +
           ";verified=" + (cert.checked ? "true" : "false");
}

}  // namespace as90::hilbert90
