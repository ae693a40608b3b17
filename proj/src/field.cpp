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

#include "as90/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>

#include "as90/error.hpp"
#include "as90/ext_poly.hpp"
#include "as90/linalg.hpp"

namespace as90 {

struct FieldCtx::Impl {
    u64 p = 0;
    unsigned n = 0;
    unsigned f = 1;
    u64 q = 0;
    u64 group_order = 0;
    PrimePoly modulus{2};
    // Column images of the power basis, row-major by source index:
    // frob_p[i * n + j] is coordinate j of (t^i)^p, likewise for sigma.
    std::vector<u64> frob_p;
    std::vector<u64> frob_sigma;
};

namespace {

using Coeffs = std::vector<u64>;

// out = a * b mod (modulus, p); `modulus` monic of degree n.
Coeffs multiply(std::span<const u64> a, std::span<const u64> b, const PrimePoly& modulus, u64 p) {
    const std::size_t n = a.size();
    Coeffs prod(2 * n - 1, 0);
    if (p <= 0xFFFFFFFFull) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
        for (std::size_t i = prod.size(); i-- > n;) {
            const u64 c = prod[i];
            if (c == 0) continue;
            const u64 neg = p - c;
            for (std::size_t j = 0; j < n; ++j) {
                prod[i - n + j] = (prod[i - n + j] + neg * modulus.coeff(j)) % p;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], p), p);
        }
        for (std::size_t i = prod.size(); i-- > n;) {
            const u64 c = prod[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                prod[i - n + j] = sub_mod(prod[i - n + j], mul_mod(c, modulus.coeff(j), p), p);
            }
        }
    }
    prod.resize(n);
    return prod;
}

Coeffs apply_columns(const std::vector<u64>& columns, std::span<const u64> a, u64 p) {
    const std::size_t n = a.size();
    Coeffs out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        const u64* col = columns.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) out[j] = add_mod(out[j], mul_mod(a[i], col[j], p), p);
    }
    return out;
}

PrimePoly search_default_modulus(u64 p, unsigned n) {
    if (n == 1) return PrimePoly::variable(p);
    // Digits c_0 .. c_{n-1} counted with c_0 most significant; c_0 = 0 is
    // always reducible for n > 1.
    std::vector<u64> digits(n, 0);
    digits[0] = 1;
    for (;;) {
        std::vector<u64> coeffs = digits;
        coeffs.push_back(1);
        PrimePoly candidate(p, std::move(coeffs));
        if (is_irreducible(candidate)) return candidate;
        std::size_t i = n;
        while (i-- > 0) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) {
            throw Error(ErrorCode::NotFound, "no irreducible polynomial found");  // unreachable for prime p
        }
    }
}

PrimePoly default_modulus(u64 p, unsigned n) {
    static std::mutex mutex;
    static std::map<std::pair<u64, unsigned>, PrimePoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
    }
    PrimePoly found = search_default_modulus(p, n);
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(p, n), found);
    return found;
}

}  // namespace

FieldCtx FieldCtx::make(u64 p, unsigned n, std::optional<PrimePoly> modulus, unsigned f) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
    if (f == 0 || n % f != 0) {
        throw Error(ErrorCode::BadSubfieldStep, "step " + std::to_string(f) + " does not divide " + std::to_string(n));
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->n = n;
    impl->f = f;
    if (auto size = checked_pow(p, n)) {
        impl->group_order = *size - 1;
    } else if (p == 2 && n == 64) {
        impl->group_order = ~u64{0};
    } else {
        throw Error(ErrorCode::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds 2^64");
    }
    impl->q = checked_pow(p, f).value_or(0);

    if (modulus) {
        if (modulus->p() != p) throw Error(ErrorCode::InvalidArgument, "modulus is over a different prime field");
        if (modulus->degree() != static_cast<int>(n)) {
            throw Error(ErrorCode::InvalidArgument,
                        "modulus " + to_string(*modulus) + " does not have degree " + std::to_string(n));
        }
        if (!is_irreducible(*modulus)) {
            throw Error(ErrorCode::ReducibleModulus, to_string(*modulus) + " is reducible over F_" + std::to_string(p));
        }
        impl->modulus = modulus->monic();
    } else {
        impl->modulus = default_modulus(p, n);
    }

    // Frobenius tables: (t^i)^p = (t^p)^i.
    FieldCtx scratch(impl);
    const FieldElem tp = pow(scratch.generator(), p);
    impl->frob_p.assign(static_cast<std::size_t>(n) * n, 0);
    FieldElem power = scratch.one();
    for (unsigned i = 0; i < n; ++i) {
        std::copy(power.coeffs().begin(), power.coeffs().end(), impl->frob_p.begin() + static_cast<std::ptrdiff_t>(i) * n);
        power *= tp;
    }
    impl->frob_sigma.assign(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        Coeffs col(n, 0);
        col[i] = 1;
        for (unsigned k = 0; k < f; ++k) col = apply_columns(impl->frob_p, col, p);
        std::copy(col.begin(), col.end(), impl->frob_sigma.begin() + static_cast<std::ptrdiff_t>(i) * n);
    }
    return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::with_step(unsigned f) const {
    if (f == impl_->f) return *this;
    return make(impl_->p, impl_->n, impl_->modulus, f);
}

u64 FieldCtx::p() const noexcept { return impl_->p; }
unsigned FieldCtx::n() const noexcept { return impl_->n; }
unsigned FieldCtx::f() const noexcept { return impl_->f; }
u64 FieldCtx::q() const noexcept { return impl_->q; }
unsigned FieldCtx::relative_degree() const noexcept { return impl_->n / impl_->f; }
const PrimePoly& FieldCtx::modulus() const noexcept { return impl_->modulus; }
u64 FieldCtx::group_order() const noexcept { return impl_->group_order; }

FieldElem FieldCtx::zero() const { return FieldElem(*this, Coeffs(impl_->n, 0)); }
FieldElem FieldCtx::one() const { return scalar(1); }

FieldElem FieldCtx::generator() const { return element(PrimePoly::variable(impl_->p)); }

FieldElem FieldCtx::scalar(u64 c) const {
    Coeffs coeffs(impl_->n, 0);
    coeffs[0] = c % impl_->p;
    return FieldElem(*this, std::move(coeffs));
}

FieldElem FieldCtx::element(std::vector<u64> coeffs) const {
    if (coeffs.size() > impl_->n) {
        throw Error(ErrorCode::InvalidArgument, std::to_string(coeffs.size()) + " coordinates for a degree-" +
                                                    std::to_string(impl_->n) + " field");
    }
    coeffs.resize(impl_->n, 0);
    for (auto& c : coeffs) c %= impl_->p;
    return FieldElem(*this, std::move(coeffs));
}

FieldElem FieldCtx::element(const PrimePoly& poly) const {
    if (poly.p() != impl_->p) throw Error(ErrorCode::CtxMismatch, "polynomial over a different prime field");
    const PrimePoly reduced = poly % impl_->modulus;
    return element(Coeffs(reduced.coeffs().begin(), reduced.coeffs().end()));
}

FieldElem FieldCtx::parse(std::string_view text) const { return element(parse_poly(text, impl_->p)); }

FieldElem FieldCtx::parse_coeffs(std::string_view text) const {
    Coeffs coeffs;
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        u64 value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::ParseError, "bad coordinate \"" + std::string(item) + "\"");
        }
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return element(std::move(coeffs));
}

FieldElem FieldCtx::adopt(const FieldElem& a) const {
    if (!same_field(a.ctx())) throw Error(ErrorCode::CtxMismatch, "element belongs to a different field");
    return FieldElem(*this, Coeffs(a.coeffs().begin(), a.coeffs().end()));
}

bool FieldCtx::same_field(const FieldCtx& other) const noexcept {
    return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus);
}

std::string FieldCtx::describe() const {
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->n) + ")/GF(" + std::to_string(impl_->p) +
           "^" + std::to_string(impl_->f) + ") mod " + to_string(impl_->modulus);
}

bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.impl_ == b.impl_ || (a.same_field(b) && a.impl_->f == b.impl_->f);
}

bool FieldElem::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

bool FieldElem::is_one() const noexcept {
    return coeffs_[0] == 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](u64 c) { return c == 0; });
}

PrimePoly FieldElem::to_poly() const { return PrimePoly(ctx_.p(), coeffs_); }

void FieldElem::require_same_ctx(const FieldElem& other) const {
    if (!(ctx_ == other.ctx_)) {
        throw Error(ErrorCode::CtxMismatch, "elements of " + ctx_.describe() + " and " + other.ctx_.describe());
    }
}

FieldElem FieldElem::operator-() const {
    Coeffs out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = neg_mod(coeffs_[i], ctx_.p());
    return FieldElem(ctx_, std::move(out));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same_ctx(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], ctx_.p());
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same_ctx(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = sub_mod(coeffs_[i], rhs.coeffs_[i], ctx_.p());
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same_ctx(rhs);
    coeffs_ = multiply(coeffs_, rhs.coeffs_, ctx_.modulus(), ctx_.p());
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
    require_same_ctx(rhs);
    return *this *= inv(rhs);
}

FieldElem FieldElem::scaled(u64 c) const {
    c %= ctx_.p();
    Coeffs out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_mod(coeffs_[i], c, ctx_.p());
    return FieldElem(ctx_, std::move(out));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.require_same_ctx(b);
    return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElem& a, const FieldElem& b) {
    a.require_same_ctx(b);
    return a.coeffs_ < b.coeffs_;
}

std::size_t FieldElemHash::operator()(const FieldElem& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (u64 c : a.coeffs()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
}

std::string to_string(const FieldElem& a) { return to_string(a.to_poly()); }

std::string to_coeff_string(const FieldElem& a) {
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(a.coeffs()[i]);
    }
    return out;
}

FieldElem pow(const FieldElem& a, u64 exp) {
    FieldElem result = a.ctx().one();
    FieldElem base = a;
    while (exp != 0) {
        if (exp & 1) result *= base;
        exp >>= 1;
        if (exp != 0) base *= base;
    }
    return result;
}

FieldElem pow_int(const FieldElem& a, i64 exp) {
    if (exp >= 0) return pow(a, static_cast<u64>(exp));
    return pow(inv(a), static_cast<u64>(-(exp + 1)) + 1);
}

FieldElem inv(const FieldElem& a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const u64 p = a.ctx().p();
    PrimePoly r0 = a.ctx().modulus();
    PrimePoly r1 = a.to_poly();
    PrimePoly s0(p), s1 = PrimePoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        PrimePoly s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    return a.ctx().element(s0.scaled(inv_mod(r0.coeff(0), p)));
}

FieldElem frobenius(const FieldElem& a, i64 k) {
    const i64 order = a.ctx().relative_degree();
    i64 steps = k % order;
    if (steps < 0) steps += order;
    Coeffs c = a.coeffs_;
    for (i64 i = 0; i < steps; ++i) c = apply_columns(a.ctx().impl_->frob_sigma, c, a.ctx().p());
    return FieldElem(a.ctx(), std::move(c));
}

FieldElem frobenius_p(const FieldElem& a, u64 k) {
    const u64 steps = k % a.ctx().n();
    Coeffs c = a.coeffs_;
    for (u64 i = 0; i < steps; ++i) c = apply_columns(a.ctx().impl_->frob_p, c, a.ctx().p());
    return FieldElem(a.ctx(), std::move(c));
}

namespace {

void require_divides(unsigned d, unsigned n) {
    if (d == 0 || n % d != 0) {
        throw Error(ErrorCode::BadSubfieldStep, std::to_string(d) + " does not divide " + std::to_string(n));
    }
}

}  // namespace

FieldElem trace(const FieldElem& a, unsigned d) {
    require_divides(d, a.ctx().n());
    FieldElem acc = a;
    FieldElem conj = a;
    for (unsigned i = 1; i < a.ctx().n() / d; ++i) {
        conj = frobenius_p(conj, d);
        acc += conj;
    }
    return acc;
}

FieldElem trace_to_base(const FieldElem& a) { return trace(a, a.ctx().f()); }

unsigned degree_over(const FieldElem& a, unsigned d) {
    require_divides(d, a.ctx().n());
    FieldElem conj = a;
    for (unsigned k = 1;; ++k) {
        conj = frobenius_p(conj, d);
        if (conj == a) return k;
    }
}

unsigned degree_over_base(const FieldElem& a) { return degree_over(a, a.ctx().f()); }

bool in_subfield(const FieldElem& a, unsigned d) { return frobenius_p(a, d) == a; }

u64 prime_field_value(const FieldElem& a) {
    if (!std::all_of(a.coeffs().begin() + 1, a.coeffs().end(), [](u64 c) { return c == 0; })) {
        throw Error(ErrorCode::InvalidArgument, to_string(a) + " is not in the prime field");
    }
    return a.coeffs()[0];
}

PrimePoly minimal_polynomial(const FieldElem& a) {
    const FieldCtx& ctx = a.ctx();
    ExtPoly product(ctx, {ctx.one()});
    FieldElem conj = a;
    do {
        product = product * ExtPoly::linear(conj);
        conj = frobenius_p(conj, 1);
    } while (!(conj == a));
    std::vector<u64> coeffs;
    for (const auto& c : product.coeffs()) coeffs.push_back(prime_field_value(c));
    return PrimePoly(ctx.p(), std::move(coeffs));
}

u64 element_order(const FieldElem& a, std::span<const PrimePower> group_factorization) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
    std::vector<PrimePower> owned;
    if (group_factorization.empty()) {
        owned = factor(a.ctx().group_order());
        group_factorization = owned;
    }
    u64 order = a.ctx().group_order();
    for (const auto& [prime, exponent] : group_factorization) {
        for (unsigned i = 0; i < exponent && order % prime == 0; ++i) {
            if (!pow(a, order / prime).is_one()) break;
            order /= prime;
        }
    }
    return order;
}

namespace {

// Discrete log of h to base gamma, where gamma has prime order ell.
u64 baby_step_giant_step(const FieldElem& gamma, const FieldElem& h, u64 ell) {
    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(ell))));
    std::unordered_map<FieldElem, u64, FieldElemHash> baby;
    baby.reserve(m);
    FieldElem cur = gamma.ctx().one();
    for (u64 j = 0; j < m; ++j) {
        baby.try_emplace(cur, j);
        cur *= gamma;
    }
    const FieldElem giant = inv(pow(gamma, m));
    FieldElem g = h;
    for (u64 i = 0; i <= m; ++i) {
        if (auto it = baby.find(g); it != baby.end()) return static_cast<u64>((static_cast<u128>(i) * m + it->second) % ell);
        g *= giant;
    }
    throw Error(ErrorCode::NotInSubgroup, "baby-step giant-step found no match");
}

}  // namespace

u64 discrete_log(const FieldElem& base, const FieldElem& target) {
    if (!(base.ctx() == target.ctx())) throw Error(ErrorCode::CtxMismatch, "discrete log across contexts");
    if (target.is_zero()) throw Error(ErrorCode::NotInSubgroup, "zero is not a power of the base");
    const u64 order = element_order(base);
    if (!pow(target, order).is_one()) {
        throw Error(ErrorCode::NotInSubgroup, to_string(target) + " is not in the subgroup generated by " + to_string(base));
    }
    const auto factors = factor(order);
    constexpr u64 max_prime = u64{1} << 40;
    for (const auto& pp : factors) {
        if (pp.prime > max_prime) {
            throw Error(ErrorCode::OrderTooLarge, "order has prime factor " + std::to_string(pp.prime));
        }
    }
    u64 result = 0;
    u64 modulus = 1;
    for (const auto& [ell, k] : factors) {
        u64 ell_k = 1;
        for (unsigned i = 0; i < k; ++i) ell_k *= ell;
        const u64 cofactor = order / ell_k;
        const FieldElem g0 = pow(base, cofactor);
        const FieldElem h0 = pow(target, cofactor);
        const FieldElem gamma = pow(g0, ell_k / ell);
        const FieldElem g0_inv = inv(g0);
        u64 x = 0;
        u64 ell_i = 1;
        for (unsigned i = 0; i < k; ++i) {
            const FieldElem hi = pow(pow(g0_inv, x) * h0, ell_k / ell_i / ell);
            x += baby_step_giant_step(gamma, hi, ell) * ell_i;
            ell_i *= ell;
        }
        // Chinese remaindering of result mod `modulus` with x mod ell_k.
        const u64 diff = sub_mod(x % ell_k, result % ell_k, ell_k);
        const u64 t = mul_mod(diff, inv_mod(modulus % ell_k, ell_k), ell_k);
        result = static_cast<u64>(result + static_cast<u128>(modulus) * t);
        modulus *= ell_k;
    }
    return result;
}

std::vector<FieldElem> subfield_basis(const FieldCtx& ctx, unsigned d) {
    require_divides(d, ctx.n());
    const std::size_t n = ctx.n();
    PrimeMatrix frob(ctx.p(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) frob(j, i) = ctx.impl_->frob_p[i * n + j];
    PrimeMatrix power = PrimeMatrix::identity(ctx.p(), n);
    for (unsigned k = 0; k < d; ++k) power = frob * power;
    std::vector<FieldElem> basis;
    for (auto& v : nullspace(power - PrimeMatrix::identity(ctx.p(), n))) basis.push_back(ctx.element(std::move(v)));
    return basis;
}

std::vector<FieldElem> subfield_elements(const FieldCtx& ctx, unsigned d, u64 limit) {
    require_divides(d, ctx.n());
    const auto count = checked_pow(ctx.p(), d);
    if (!count || *count > limit) {
        throw Error(ErrorCode::FieldTooLarge, "GF(" + std::to_string(ctx.p()) + "^" + std::to_string(d) +
                                                  ") has more than " + std::to_string(limit) + " elements");
    }
    const auto basis = subfield_basis(ctx, d);
    std::vector<FieldElem> out;
    out.reserve(*count);
    std::vector<u64> digits(basis.size(), 0);
    for (u64 idx = 0; idx < *count; ++idx) {
        FieldElem acc = ctx.zero();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (digits[i] != 0) acc += basis[i].scaled(digits[i]);
        }
        out.push_back(std::move(acc));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < ctx.p()) break;
            digits[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubfieldEmbedding::SubfieldEmbedding(FieldCtx source, FieldCtx target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.p() != target_.p() || target_.n() % source_.n() != 0) {
        throw Error(ErrorCode::NoEmbedding, "GF(" + std::to_string(source_.p()) + "^" + std::to_string(source_.n()) +
                                                ") does not embed in GF(" + std::to_string(target_.p()) + "^" +
                                                std::to_string(target_.n()) + ")");
    }
    const auto roots = find_roots(source_.modulus(), target_);
    if (roots.empty()) throw Error(ErrorCode::NoEmbedding, "source modulus has no root in the target");
    const FieldElem& beta = roots.front();
    FieldElem power = target_.one();
    for (unsigned i = 0; i < source_.n(); ++i) {
        generator_powers_.push_back(power);
        power *= beta;
    }
}

FieldElem SubfieldEmbedding::operator()(const FieldElem& a) const {
    if (!source_.same_field(a.ctx())) throw Error(ErrorCode::CtxMismatch, "element is not in the embedding source");
    FieldElem acc = target_.zero();
    for (std::size_t i = 0; i < generator_powers_.size(); ++i) {
        if (a.coeffs()[i] != 0) acc += generator_powers_[i].scaled(a.coeffs()[i]);
    }
    return acc;
}

FieldElem subfield_embed(const FieldElem& a, const FieldCtx& target) { return SubfieldEmbedding(a.ctx(), target)(a); }

}  // namespace as90
