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

// Word-size modular arithmetic and integer factorization.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace as90 {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    const u64 s = a + b;
    return (s < a || s >= m) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + (m - b); }

inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    if (m <= 0xFFFFFFFFull) return (a * b) % m;
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 neg_mod(u64 a, u64 m) noexcept { return a == 0 ? 0 : m - a; }

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept;

/// Inverse of a modulo m; a must be a unit.
u64 inv_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n) noexcept;

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Largest integer factor() will accept. Defaults to 2^64 - 1 and can be
/// lowered through the AS90_FACTOR_BOUND environment variable.
u64 factor_bound() noexcept;

/// Prime factorization in increasing prime order. Trial division to 10^6,
/// then Pollard-rho. Throws FactorizationTooHard above factor_bound().
std::vector<PrimePower> factor(u64 n);

/// All positive divisors in increasing order.
std::vector<u64> divisors(u64 n);

}  // namespace as90
