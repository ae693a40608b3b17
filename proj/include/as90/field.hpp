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

// Arithmetic in GF(p^n) with a designated base field GF(q), q = p^f.

#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "as90/intmath.hpp"
#include "as90/prime_poly.hpp"

namespace as90 {

class FieldElem;

/// Immutable description of E = GF(p^n) = F_p[t]/(modulus) together with a
/// subfield step f | n. The base field is F = GF(q) with q = p^f and the
/// distinguished generator of Gal(E/F) is sigma(x) = x^q.
///
/// Copies share one immutable state block, so contexts are cheap to pass
/// around and safe to use from several threads.
class FieldCtx {
public:
    /// Throws NotPrime, ReducibleModulus, BadSubfieldStep, FieldTooLarge
    /// (p^n > 2^64) or InvalidArgument (modulus degree != n). Without a
    /// modulus the lexicographically smallest monic irreducible of degree n
    /// is used, comparing coefficients from the constant term up.
    static FieldCtx make(u64 p, unsigned n, std::optional<PrimePoly> modulus = std::nullopt, unsigned f = 1);

    /// The same field with another subfield step.
    FieldCtx with_step(unsigned f) const;

    u64 p() const noexcept;
    unsigned n() const noexcept;
    unsigned f() const noexcept;
    /// q = p^f. Zero only in the degenerate case q = 2^64.
    u64 q() const noexcept;
    /// |E:F| = n / f, the order of sigma.
    unsigned relative_degree() const noexcept;
    const PrimePoly& modulus() const noexcept;
    /// |E^*| = p^n - 1.
    u64 group_order() const noexcept;

    FieldElem zero() const;
    FieldElem one() const;
    /// The class of t, a root of the modulus.
    FieldElem generator() const;
    FieldElem scalar(u64 c) const;
    /// Power-basis coordinates; the vector is zero-padded or must fit in n.
    FieldElem element(std::vector<u64> coeffs) const;
    /// Reduces an arbitrary F_p polynomial modulo the modulus.
    FieldElem element(const PrimePoly& poly) const;
    /// Human polynomial form in t, e.g. "t^2+t+1".
    FieldElem parse(std::string_view text) const;
    /// Comma separated coordinates, low degree first: "1,0,1".
    FieldElem parse_coeffs(std::string_view text) const;
    /// Re-homes an element of the same field under this context's step.
    FieldElem adopt(const FieldElem& a) const;

    template <class Rng>
    FieldElem random(Rng& rng) const;

    bool same_field(const FieldCtx& other) const noexcept;
    /// "GF(2^6)/GF(2^1) mod t^6+t^4+t^3+t+1"
    std::string describe() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept;

private:
    struct Impl;
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend class FieldElem;
    friend FieldElem frobenius(const FieldElem&, i64);
    friend FieldElem frobenius_p(const FieldElem&, u64);
    friend std::vector<FieldElem> subfield_basis(const FieldCtx&, unsigned);
};

/// Element of a FieldCtx, stored as its n power-basis coordinates.
class FieldElem {
public:
    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::span<const u64> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    PrimePoly to_poly() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    /// Equality requires the same context; mismatched contexts throw.
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    /// Lexicographic on coordinates, constant term first.
    friend bool operator<(const FieldElem& a, const FieldElem& b);

    /// Multiplication by an F_p scalar.
    FieldElem scaled(u64 c) const;

private:
    FieldElem(FieldCtx ctx, std::vector<u64> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}
    void require_same_ctx(const FieldElem& other) const;

    FieldCtx ctx_;
    std::vector<u64> coeffs_;

    friend class FieldCtx;
    friend FieldElem frobenius(const FieldElem&, i64);
    friend FieldElem frobenius_p(const FieldElem&, u64);
};

struct FieldElemHash {
    std::size_t operator()(const FieldElem& a) const noexcept;
};

std::string to_string(const FieldElem& a);
/// "1,0,1"
std::string to_coeff_string(const FieldElem& a);

FieldElem pow(const FieldElem& a, u64 exp);
/// Negative exponents go through the inverse.
FieldElem pow_int(const FieldElem& a, i64 exp);
/// Throws DivisionByZero for zero.
FieldElem inv(const FieldElem& a);

/// sigma^k(a) = a^{q^k}; k is taken mod n/f.
FieldElem frobenius(const FieldElem& a, i64 k = 1);
/// a^{p^k}; k is taken mod n.
FieldElem frobenius_p(const FieldElem& a, u64 k = 1);

/// Tr from GF(p^n) down to GF(p^d), as an element of E. Needs d | n.
FieldElem trace(const FieldElem& a, unsigned d);
/// Tr^E_F with F = GF(q) the context's base field.
FieldElem trace_to_base(const FieldElem& a);

/// Degree of a over GF(p^d): the least k with a^{p^{dk}} = a. Needs d | n.
unsigned degree_over(const FieldElem& a, unsigned d);
/// Degree over the context's base field, i.e. |F(a):F|.
unsigned degree_over_base(const FieldElem& a);
/// True when a lies in GF(p^d).
bool in_subfield(const FieldElem& a, unsigned d);

/// Value of an element of the prime field F_p as a residue; throws
/// InvalidArgument for elements outside F_p.
u64 prime_field_value(const FieldElem& a);

/// Minimal polynomial of a over F_p.
PrimePoly minimal_polynomial(const FieldElem& a);

/// Multiplicative order. An optional factorization of p^n - 1 skips the
/// internal factoring step. Throws ZeroElement for zero.
u64 element_order(const FieldElem& a, std::span<const PrimePower> group_factorization = {});

/// Pohlig-Hellman over the prime factors of ord(base) with baby-step
/// giant-step per factor. Returns the unique e in [0, ord(base)) with
/// base^e = target. Throws NotInSubgroup or OrderTooLarge (a prime factor
/// of the order above 2^40).
u64 discrete_log(const FieldElem& base, const FieldElem& target);

/// F_p-basis of GF(p^d) inside E. Needs d | n.
std::vector<FieldElem> subfield_basis(const FieldCtx& ctx, unsigned d);

/// Every element of GF(p^d) inside E, sorted. Throws FieldTooLarge above
/// `limit` elements.
std::vector<FieldElem> subfield_elements(const FieldCtx& ctx, unsigned d, u64 limit = u64{1} << 24);

/// Ring embedding of GF(p^d) (as given by `source`) into `target` with
/// d | n. The image of the source generator is the smallest root of the
/// source modulus in the target, so the map is deterministic.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldCtx source, FieldCtx target);

    const FieldCtx& source() const noexcept { return source_; }
    const FieldCtx& target() const noexcept { return target_; }
    FieldElem operator()(const FieldElem& a) const;

private:
    FieldCtx source_;
    FieldCtx target_;
    std::vector<FieldElem> generator_powers_;
};

/// One-shot embedding; throws NoEmbedding when the degree does not divide.
FieldElem subfield_embed(const FieldElem& a, const FieldCtx& target);

template <class Rng>
FieldElem FieldCtx::random(Rng& rng) const {
    std::uniform_int_distribution<u64> coef(0, p() - 1);
    std::vector<u64> c(n());
    for (auto& v : c) v = coef(rng);
    return element(std::move(c));
}

}  // namespace as90
