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

#include "as90/ext_poly.hpp"

#include <algorithm>
#include <random>

#include "as90/error.hpp"

namespace as90 {

ExtPoly::ExtPoly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!(c.ctx() == ctx_)) throw Error(ErrorCode::CtxMismatch, "coefficient from another context");
    }
    trim();
}

ExtPoly ExtPoly::from_prime_poly(const FieldCtx& ctx, const PrimePoly& f) {
    std::vector<FieldElem> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (u64 c : f.coeffs()) coeffs.push_back(ctx.scalar(c));
    return ExtPoly(ctx, std::move(coeffs));
}

ExtPoly ExtPoly::linear(const FieldElem& root) { return ExtPoly(root.ctx(), {-root, root.ctx().one()}); }

void ExtPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem ExtPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_.zero(); }

ExtPoly ExtPoly::monic() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no monic form");
    const FieldElem lead_inv = inv(coeffs_.back());
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * lead_inv);
    return ExtPoly(ctx_, std::move(out));
}

FieldElem ExtPoly::evaluate(const FieldElem& x) const {
    FieldElem acc = ctx_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExtPoly& ExtPoly::operator+=(const ExtPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(ctx_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(ctx_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
    if (a.is_zero() || b.is_zero()) return ExtPoly(a.ctx_, {});
    std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ExtPoly(a.ctx_, std::move(out));
}

bool operator==(const ExtPoly& a, const ExtPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
}

std::pair<ExtPoly, ExtPoly> ExtPoly::divmod(const ExtPoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    if (degree() < divisor.degree()) return {ExtPoly(ctx_, {}), *this};
    std::vector<FieldElem> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<FieldElem> quot(rem.size() - dd, ctx_.zero());
    const FieldElem lead_inv = inv(divisor.coeffs_.back());
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        const FieldElem c = rem[i] * lead_inv;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
    }
    rem.resize(dd, ctx_.zero());
    return {ExtPoly(ctx_, std::move(quot)), ExtPoly(ctx_, std::move(rem))};
}

ExtPoly gcd(const ExtPoly& a, const ExtPoly& b) {
    ExtPoly x = a, y = b;
    while (!y.is_zero()) {
        ExtPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

ExtPoly pow_mod(const ExtPoly& base, u64 exp, const ExtPoly& modulus) {
    ExtPoly result = ExtPoly(base.ctx(), {base.ctx().one()}).divmod(modulus).second;
    ExtPoly b = base.divmod(modulus).second;
    while (exp != 0) {
        if (exp & 1) result = (result * b).divmod(modulus).second;
        exp >>= 1;
        if (exp != 0) b = (b * b).divmod(modulus).second;
    }
    return result;
}

namespace {

// g is monic, square-free and splits into distinct linear factors.
void split_linear(const ExtPoly& g, std::mt19937_64& rng, std::vector<FieldElem>& roots) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        roots.push_back(-g.coeff(0));
        return;
    }
    const FieldCtx& ctx = g.ctx();
    const ExtPoly t(ctx, {ctx.zero(), ctx.one()});
    for (;;) {
        const FieldElem delta = ctx.random(rng);
        ExtPoly test(ctx, {});
        if (ctx.p() == 2) {
            // Absolute trace of delta*t, which is 0 or 1 at every root.
            ExtPoly term(ctx, {ctx.zero(), delta});
            test = term;
            for (unsigned i = 1; i < ctx.n(); ++i) {
                term = (term * term).divmod(g).second;
                test += term;
            }
        } else {
            const ExtPoly shifted(ctx, {delta, ctx.one()});
            test = pow_mod(shifted, ctx.group_order() / 2, g) - ExtPoly(ctx, {ctx.one()});
        }
        const ExtPoly h = gcd(g, test);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, rng, roots);
            split_linear(g.divmod(h).first, rng, roots);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElem> find_roots(const ExtPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    if (f.degree() < 1) return {};
    const FieldCtx& ctx = f.ctx();
    const ExtPoly g = f.monic();
    // h = t^{p^n} mod g, so gcd(g, h - t) collects the distinct linear factors.
    const ExtPoly t(ctx, {ctx.zero(), ctx.one()});
    ExtPoly h = t.divmod(g).second;
    for (unsigned i = 0; i < ctx.n(); ++i) h = pow_mod(h, ctx.p(), g);
    const ExtPoly linear_part = gcd(g, h - t);
    std::mt19937_64 rng(0);
    std::vector<FieldElem> roots;
    split_linear(linear_part, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<FieldElem> find_roots(const PrimePoly& f, const FieldCtx& field) {
    return find_roots(ExtPoly::from_prime_poly(field, f));
}

}  // namespace as90
