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

#include "as90/intmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "as90/error.hpp"

namespace as90 {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::BadSubfieldStep: return "BadSubfieldStep";
        case ErrorCode::CtxMismatch: return "CtxMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::FactorizationTooHard: return "FactorizationTooHard";
        case ErrorCode::NotInSubgroup: return "NotInSubgroup";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::NoEmbedding: return "NoEmbedding";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::NoSuchDegree: return "NoSuchDegree";
        case ErrorCode::RandomRetriesExhausted: return "RandomRetriesExhausted";
        case ErrorCode::TraceNotZero: return "TraceNotZero";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::NoPeriodWithinBound: return "NoPeriodWithinBound";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::WrongNpCase: return "WrongNpCase";
        case ErrorCode::BadOrder: return "BadOrder";
        case ErrorCode::WrongCongruence: return "WrongCongruence";
        case ErrorCode::UnsupportedTwoPart: return "UnsupportedTwoPart";
        case ErrorCode::EqualPrimes: return "EqualPrimes";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(u64 a, u64 m) {
    // Extended Euclid on signed 128-bit to avoid overflow near 2^64.
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        const __int128 quotient = r / new_r;
        t -= quotient * new_t;
        std::swap(t, new_t);
        r -= quotient * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw Error(ErrorCode::DivisionByZero, "element is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept {
    u128 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        result *= base;
        if (result > ~u64{0}) return std::nullopt;
    }
    return static_cast<u64>(result);
}

u64 factor_bound() noexcept {
    if (const char* env = std::getenv("AS90_FACTOR_BOUND")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return ~u64{0};
}

namespace {

// Brent's variant of Pollard rho; n is odd and composite.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor(u64 n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    if (n > factor_bound()) {
        throw Error(ErrorCode::FactorizationTooHard,
                    std::to_string(n) + " exceeds the factorization bound " + std::to_string(factor_bound()));
    }
    std::map<u64, unsigned> found;
    constexpr u64 trial_limit = 1000000;
    for (u64 d = 2; d <= trial_limit && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            ++found[d];
            n /= d;
        }
    }
    split_into(n, found);
    std::vector<PrimePower> result;
    result.reserve(found.size());
    for (const auto& [prime, exponent] : found) result.push_back({prime, exponent});
    return result;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> result{1};
    for (const auto& [prime, exponent] : factor(n)) {
        const std::size_t count = result.size();
        u64 power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) result.push_back(result[i] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace as90
