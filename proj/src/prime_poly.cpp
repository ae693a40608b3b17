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

#include "as90/prime_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>

#include "as90/error.hpp"

namespace as90 {

PrimePoly::PrimePoly(u64 p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

PrimePoly::PrimePoly(u64 p, std::vector<u64> coeffs) : PrimePoly(p) {
    for (auto& c : coeffs) c %= p;
    coeffs_ = std::move(coeffs);
    trim();
}

PrimePoly PrimePoly::constant(u64 p, u64 c) { return PrimePoly(p, {c}); }

PrimePoly PrimePoly::monomial(u64 p, unsigned degree, u64 c) {
    std::vector<u64> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return PrimePoly(p, std::move(coeffs));
}

void PrimePoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void PrimePoly::require_same_field(const PrimePoly& other) const {
    if (p_ != other.p_) {
        throw Error(ErrorCode::CtxMismatch,
                    "polynomials over F_" + std::to_string(p_) + " and F_" + std::to_string(other.p_));
    }
}

PrimePoly PrimePoly::monic() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no monic form");
    return scaled(inv_mod(leading(), p_));
}

PrimePoly PrimePoly::scaled(u64 c) const {
    c %= p_;
    std::vector<u64> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = as90::mul_mod(coeffs_[i], c, p_);
    return PrimePoly(Unchecked{}, p_, std::move(out));
}

PrimePoly PrimePoly::derivative() const {
    std::vector<u64> out;
    if (coeffs_.size() > 1) {
        out.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = as90::mul_mod(coeffs_[i], i % p_, p_);
    }
    return PrimePoly(Unchecked{}, p_, std::move(out));
}

u64 PrimePoly::evaluate(u64 x) const noexcept {
    x %= p_;
    u64 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(as90::mul_mod(acc, x, p_), *it, p_);
    return acc;
}

PrimePoly PrimePoly::operator-() const {
    std::vector<u64> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = neg_mod(coeffs_[i], p_);
    return PrimePoly(Unchecked{}, p_, std::move(out));
}

PrimePoly& PrimePoly::operator+=(const PrimePoly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], p_);
    trim();
    return *this;
}

PrimePoly& PrimePoly::operator-=(const PrimePoly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = sub_mod(coeffs_[i], rhs.coeffs_[i], p_);
    trim();
    return *this;
}

PrimePoly& PrimePoly::operator*=(const PrimePoly& rhs) {
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<u64> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = add_mod(out[i + j], as90::mul_mod(coeffs_[i], rhs.coeffs_[j], p_), p_);
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::pair<PrimePoly, PrimePoly> PrimePoly::divmod(const PrimePoly& divisor) const {
    require_same_field(divisor);
    if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    if (degree() < divisor.degree()) return {PrimePoly(Unchecked{}, p_, {}), *this};
    std::vector<u64> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<u64> quot(rem.size() - dd, 0);
    const u64 lead_inv = inv_mod(divisor.leading(), p_);
    for (std::size_t i = rem.size(); i-- > dd;) {
        const u64 c = as90::mul_mod(rem[i], lead_inv, p_);
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] = sub_mod(rem[i - dd + j], as90::mul_mod(c, divisor.coeffs_[j], p_), p_);
        }
    }
    rem.resize(dd);
    return {PrimePoly(Unchecked{}, p_, std::move(quot)), PrimePoly(Unchecked{}, p_, std::move(rem))};
}

PrimePoly operator/(const PrimePoly& a, const PrimePoly& b) { return a.divmod(b).first; }
PrimePoly operator%(const PrimePoly& a, const PrimePoly& b) { return a.divmod(b).second; }

bool lex_less(const PrimePoly& a, const PrimePoly& b) noexcept {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

PrimePoly gcd(const PrimePoly& a, const PrimePoly& b) {
    PrimePoly x = a, y = b;
    while (!y.is_zero()) {
        PrimePoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& modulus) { return (a * b) % modulus; }

PrimePoly pow_mod(const PrimePoly& base, u64 exp, const PrimePoly& modulus) {
    PrimePoly result = PrimePoly::constant(base.p(), 1) % modulus;
    PrimePoly b = base % modulus;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, b, modulus);
        exp >>= 1;
        if (exp != 0) b = mul_mod(b, b, modulus);
    }
    return result;
}

namespace {

// t^{p^k} mod f for k = 0..count, by repeated p-th powering.
std::vector<PrimePoly> frobenius_powers_of_t(const PrimePoly& f, unsigned count) {
    std::vector<PrimePoly> out;
    out.reserve(count + 1);
    out.push_back(PrimePoly::variable(f.p()) % f);
    for (unsigned k = 1; k <= count; ++k) out.push_back(pow_mod(out.back(), f.p(), f));
    return out;
}

PrimePoly pth_root(const PrimePoly& f) {
    const u64 p = f.p();
    std::vector<u64> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
    return PrimePoly(p, std::move(out));
}

// Splits a square-free product of irreducibles of common degree d.
void equal_degree_split(const PrimePoly& g, unsigned d, std::mt19937_64& rng, std::vector<PrimePoly>& out) {
    if (g.degree() <= static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    const u64 p = g.p();
    std::uniform_int_distribution<u64> coef(0, p - 1);
    for (;;) {
        std::vector<u64> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc) c = coef(rng);
        const PrimePoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        PrimePoly test(p);
        if (p == 2) {
            // a + a^2 + ... + a^{2^{d-1}} takes values in F_2 on every factor.
            PrimePoly power = a;
            test = a;
            for (unsigned i = 1; i < d; ++i) {
                power = mul_mod(power, power, g);
                test += power;
            }
        } else {
            // a^{(p^d-1)/2} = (a^{1+p+...+p^{d-1}})^{(p-1)/2}
            PrimePoly power = a;
            PrimePoly norm = a;
            for (unsigned i = 1; i < d; ++i) {
                power = pow_mod(power, p, g);
                norm = mul_mod(norm, power, g);
            }
            test = pow_mod(norm, (p - 1) / 2, g) - PrimePoly::constant(p, 1);
        }
        const PrimePoly h = gcd(g, test);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

bool factor_order(const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return lex_less(a.factor, b.factor);
}

}  // namespace

bool is_irreducible(const PrimePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const PrimePoly g = f.monic();
    const auto powers = frobenius_powers_of_t(g, static_cast<unsigned>(n));
    const PrimePoly t = PrimePoly::variable(f.p()) % g;
    if (powers[static_cast<std::size_t>(n)] != t) return false;
    for (const auto& [r, _] : factor(static_cast<u64>(n))) {
        if (!gcd(g, powers[static_cast<std::size_t>(n) / r] - t).is_one()) return false;
    }
    return true;
}

std::vector<PolyFactor> squarefree_factor(const PrimePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free factorization of the zero polynomial");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    const u64 p = f.p();
    const PrimePoly g = f.monic();
    PrimePoly c = gcd(g, g.derivative());
    PrimePoly w = g / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        PrimePoly y = gcd(w, c);
        PrimePoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac, i});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [fac, m] : squarefree_factor(pth_root(c))) out.push_back({fac, static_cast<unsigned>(m * p)});
    }
    return out;
}

std::vector<DegreeFactor> distinct_degree_factor(const PrimePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "distinct-degree factorization of the zero polynomial");
    std::vector<DegreeFactor> out;
    PrimePoly rest = f.degree() > 0 ? f.monic() : f;
    const PrimePoly t = PrimePoly::variable(f.p());
    PrimePoly h = t;
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
        h = pow_mod(h, f.p(), rest);
        PrimePoly g = gcd(rest, h - t);
        if (g.degree() > 0) {
            rest = rest / g;
            h = h % rest;
            out.push_back({std::move(g), d});
        }
    }
    if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
    return out;
}

std::vector<PolyFactor> factor(const PrimePoly& f) {
    std::mt19937_64 rng(0);
    std::map<std::vector<u64>, PolyFactor> merged;
    for (const auto& [sqfree, multiplicity] : squarefree_factor(f)) {
        for (const auto& [product, d] : distinct_degree_factor(sqfree)) {
            std::vector<PrimePoly> pieces;
            equal_degree_split(product, d, rng, pieces);
            for (auto& piece : pieces) {
                std::vector<u64> key(piece.coeffs().begin(), piece.coeffs().end());
                auto [it, inserted] = merged.try_emplace(key, PolyFactor{piece, 0});
                it->second.multiplicity += multiplicity;
            }
        }
    }
    std::vector<PolyFactor> out;
    for (auto& [_, pf] : merged) out.push_back(pf);
    std::sort(out.begin(), out.end(), factor_order);
    return out;
}

std::string to_string(const PrimePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const u64 c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += 't';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string to_coeff_string(const PrimePoly& f) {
    std::string out = "p:" + std::to_string(f.p()) + ";coeffs:";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, u64 p) : text_(text), p_(p) {}

    PrimePoly parse() {
        std::map<unsigned, u64> terms;
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [degree, coeff] = parse_term();
            if (negative) coeff = neg_mod(coeff, p_);
            terms[degree] = add_mod(terms[degree], coeff, p_);
            skip_space();
        }
        unsigned top = terms.empty() ? 0 : terms.rbegin()->first;
        std::vector<u64> coeffs(top + 1, 0);
        for (const auto& [d, c] : terms) coeffs[d] = c;
        return PrimePoly(p_, std::move(coeffs));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" +
                                               std::string(text_) + "\"");
    }

    std::optional<u64> parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        u64 value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) fail("number out of range");
        return value;
    }

    std::pair<unsigned, u64> parse_term() {
        u64 coeff = 1;
        bool have_coeff = false;
        if (auto number = parse_number()) {
            coeff = *number % p_;
            have_coeff = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (peek() != 't') fail("expected 't' after '*'");
            }
        }
        if (peek() != 't') {
            if (!have_coeff) fail("expected a coefficient or 't'");
            return {0, coeff};
        }
        ++pos_;
        skip_space();
        unsigned degree = 1;
        if (peek() == '^') {
            ++pos_;
            skip_space();
            auto exponent = parse_number();
            if (!exponent || *exponent > 4096) fail("bad exponent");
            degree = static_cast<unsigned>(*exponent);
        }
        return {degree, coeff};
    }

    std::string_view text_;
    u64 p_;
    std::size_t pos_ = 0;
};

}  // namespace

PrimePoly parse_poly(std::string_view text, u64 p) { return TermParser(text, p).parse(); }

PrimePoly parse_coeff_poly(std::string_view text) {
    auto bad = [&](const std::string& why) {
        return Error(ErrorCode::ParseError, why + " in \"" + std::string(text) + "\"");
    };
    constexpr std::string_view p_tag = "p:";
    constexpr std::string_view c_tag = ";coeffs:";
    if (!text.starts_with(p_tag)) throw bad("missing 'p:'");
    const std::size_t sep = text.find(c_tag);
    if (sep == std::string_view::npos) throw bad("missing ';coeffs:'");
    u64 p = 0;
    const auto p_text = text.substr(p_tag.size(), sep - p_tag.size());
    if (std::from_chars(p_text.data(), p_text.data() + p_text.size(), p).ptr != p_text.data() + p_text.size() ||
        p_text.empty()) {
        throw bad("bad prime");
    }
    std::vector<u64> coeffs;
    std::string_view rest = text.substr(sep + c_tag.size());
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        u64 c = 0;
        if (item.empty() || std::from_chars(item.data(), item.data() + item.size(), c).ptr != item.data() + item.size()) {
            throw bad("bad coefficient");
        }
        if (c >= p) throw bad("coefficient out of range");
        coeffs.push_back(c);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw bad("trailing comma");
    }
    if (!coeffs.empty() && coeffs.back() == 0) throw bad("non-canonical trailing zero");
    return PrimePoly(p, std::move(coeffs));
}

}  // namespace as90
