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

#include <utility>
#include <vector>

#include "as90/field.hpp"

namespace as90 {

/// Univariate polynomial with coefficients in a FieldCtx, low degree first.
/// Only what root finding and root-product oracles need.
class ExtPoly {
public:
    ExtPoly(FieldCtx ctx, std::vector<FieldElem> coeffs);
    static ExtPoly from_prime_poly(const FieldCtx& ctx, const PrimePoly& f);
    /// t - a
    static ExtPoly linear(const FieldElem& root);

    const FieldCtx& ctx() const noexcept { return ctx_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    FieldElem coeff(std::size_t i) const;

    ExtPoly monic() const;
    FieldElem evaluate(const FieldElem& x) const;

    ExtPoly& operator+=(const ExtPoly& rhs);
    ExtPoly& operator-=(const ExtPoly& rhs);
    friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
    friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
    friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b);
    friend bool operator==(const ExtPoly& a, const ExtPoly& b);

    std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& divisor) const;

private:
    void trim();

    FieldCtx ctx_;
    std::vector<FieldElem> coeffs_;
};

ExtPoly gcd(const ExtPoly& a, const ExtPoly& b);
ExtPoly pow_mod(const ExtPoly& base, u64 exp, const ExtPoly& modulus);

/// Distinct roots in the coefficient field, sorted. Deterministic.
std::vector<FieldElem> find_roots(const ExtPoly& f);
/// Roots in `field` of a polynomial over F_p.
std::vector<FieldElem> find_roots(const PrimePoly& f, const FieldCtx& field);

}  // namespace as90
