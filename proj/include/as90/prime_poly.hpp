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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "as90/intmath.hpp"

namespace as90 {

/// Dense univariate polynomial over the prime field F_p.
///
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial is the empty vector and degree() == coeffs().size() - 1
/// otherwise.
class PrimePoly {
public:
    /// Zero polynomial over F_p; p must be prime.
    explicit PrimePoly(u64 p);
    /// Coefficients are reduced mod p and trailing zeros dropped.
    PrimePoly(u64 p, std::vector<u64> coeffs);

    static PrimePoly constant(u64 p, u64 c);
    static PrimePoly monomial(u64 p, unsigned degree, u64 c = 1);
    /// The polynomial t.
    static PrimePoly variable(u64 p) { return monomial(p, 1); }

    u64 p() const noexcept { return p_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::span<const u64> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^i, zero beyond the degree.
    u64 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    u64 leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    PrimePoly monic() const;
    PrimePoly scaled(u64 c) const;
    PrimePoly derivative() const;
    u64 evaluate(u64 x) const noexcept;

    PrimePoly operator-() const;
    PrimePoly& operator+=(const PrimePoly& rhs);
    PrimePoly& operator-=(const PrimePoly& rhs);
    PrimePoly& operator*=(const PrimePoly& rhs);

    friend PrimePoly operator+(PrimePoly a, const PrimePoly& b) { return a += b; }
    friend PrimePoly operator-(PrimePoly a, const PrimePoly& b) { return a -= b; }
    friend PrimePoly operator*(PrimePoly a, const PrimePoly& b) { return a *= b; }
    friend PrimePoly operator/(const PrimePoly& a, const PrimePoly& b);
    friend PrimePoly operator%(const PrimePoly& a, const PrimePoly& b);
    friend bool operator==(const PrimePoly&, const PrimePoly&) = default;

    /// Quotient and remainder; throws ZeroPolynomial for a zero divisor.
    std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& divisor) const;

private:
    struct Unchecked {};
    PrimePoly(Unchecked, u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) { trim(); }
    void trim() noexcept;
    void require_same_field(const PrimePoly& other) const;

    u64 p_;
    std::vector<u64> coeffs_;

    friend PrimePoly mul_mod(const PrimePoly&, const PrimePoly&, const PrimePoly&);
};

/// Lexicographic order on coefficient vectors, comparing the constant term
/// first. Shorter vectors compare as if padded with zeros.
bool lex_less(const PrimePoly& a, const PrimePoly& b) noexcept;

/// Monic gcd; gcd(0, 0) = 0.
PrimePoly gcd(const PrimePoly& a, const PrimePoly& b);
PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& modulus);
PrimePoly pow_mod(const PrimePoly& base, u64 exp, const PrimePoly& modulus);

bool is_irreducible(const PrimePoly& f);

struct PolyFactor {
    PrimePoly factor;
    unsigned multiplicity;
};

/// Square-free decomposition: f = lc * prod g_i^{m_i} with each g_i square-free.
std::vector<PolyFactor> squarefree_factor(const PrimePoly& f);

struct DegreeFactor {
    PrimePoly product;  ///< product of all irreducible factors of this degree
    unsigned degree;
};

/// Distinct-degree factorization of a square-free polynomial.
std::vector<DegreeFactor> distinct_degree_factor(const PrimePoly& f);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, lex_less). The leading coefficient is dropped.
std::vector<PolyFactor> factor(const PrimePoly& f);

/// Human form with descending powers: "t^8+t^7+t^2+t+1", "2*t^3+t+4", "0".
std::string to_string(const PrimePoly& f);
/// Coefficient form: "p:2;coeffs:1,1,1,0,0,0,0,1,1" (low degree first).
std::string to_coeff_string(const PrimePoly& f);

/// Parses the human form over F_p. Accepts terms in any order, optional
/// '*' between coefficient and t, and leading '-' signs.
PrimePoly parse_poly(std::string_view text, u64 p);
/// Parses the coefficient form; the prime comes from the text.
PrimePoly parse_coeff_poly(std::string_view text);

}  // namespace as90
