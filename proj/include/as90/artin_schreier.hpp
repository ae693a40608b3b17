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

// Roots of t^q - t - y over E = GF(p^n), q = p^f, by closed formulas.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "as90/field.hpp"
#include "as90/hilbert90.hpp"

namespace as90::artin_schreier {

/// The polynomial t^q - t - y, with E and q taken from the context.
struct Instance {
    Instance(FieldCtx ctx, FieldElem y);

    FieldCtx ctx;
    FieldElem y;
};

enum class Method { coprime, table, prime_r, p2mod3, np_p, general, brute };

std::string_view to_string(Method m) noexcept;

/// All q roots x + u, u in GF(q), of a split instance.
struct RootSet {
    FieldElem y;
    FieldElem base_root;
    u64 q;
    Method method;
    /// c_0 .. c_{N-1} with base_root = sum c_i sigma^i(y), N = |E:F|.
    std::vector<FieldElem> coefficients;
    /// Period of the coefficient sequence continued past N.
    u64 coefficient_period;
    std::string note;

    /// Every root, sorted. Throws FieldTooLarge when q > 2^24.
    std::vector<FieldElem> roots() const;
    bool contains(const FieldElem& r) const;
};

/// Tr_{E/GF(q)}(y) = 0.
bool has_root(const Instance& inst);

/// R(y, z) with the given witness, or a deterministic one.
RootSet root_general(const Instance& inst, std::optional<hilbert90::TraceOneWitness> witness = std::nullopt);

/// z = 1/N for N = |E:F| prime to p. Throws WrongNpCase.
RootSet root_coprime(const Instance& inst);

/// zeta with zeta^p - zeta^{p-1} + 1 = 0 as the generator of GF(p^p), whose
/// modulus is that polynomial. Throws FieldTooLarge for p > 13.
FieldElem find_zeta(u64 p);

/// z = (n/p)^{-1} zeta when f = 1 and n_p = p. Throws WrongNpCase.
RootSet root_np_p(const Instance& inst);

/// zeta a primitive r-th root of unity from a big factor of Phi_r, scaled by
/// (n tau / e)^{-1} with e = Ord_r(p). Needs f = 1. Throws BadOrder when
/// e does not divide n or p divides n/e.
RootSet root_via_prime_r(const Instance& inst, u64 r);

/// Closed form with a cube root of unity, for p = 2 mod 3, f = 1, n even
/// and p not dividing n/2. Throws WrongCongruence or WrongNpCase. The note
/// names the sign variant that verified ("statement" or "proof").
RootSet root_p2mod3(const Instance& inst);

/// Characteristic 2 with q = 2, using the tabulated z for n_2 >= 2 and
/// z = 1 for odd n. Throws UnsupportedTwoPart for n_2 = 64.
RootSet root_char2_table(const Instance& inst);

/// Exponents of x_0 .. x_{n2-1} to the base z for the tabulated z of degree
/// n2; nullopt marks x_0 = 0. Stored for n2 = 4, 8, 16; NotFound otherwise.
const std::vector<std::optional<u64>>& table_exponents(unsigned n2);

/// The same exponents computed by discrete logarithms, for any table n2.
std::vector<std::optional<u64>> compute_exponents(unsigned n2);

enum class Outcome { split, irreducible, undetermined };

struct Factorization {
    Outcome outcome;
    std::optional<RootSet> roots;
    std::string report;
};

/// Tries coprime, table, p2mod3, n_p = p and general in that order. With no
/// root the polynomial is irreducible when q = p; for q > p the answer is
/// left undetermined.
Factorization factor_artin_schreier(const Instance& inst);

/// Exhaustive scan for r^q - r = y, sorted. Throws FieldTooLarge when
/// |E| > limit.
std::vector<FieldElem> brute_force_roots(const Instance& inst, u64 limit = u64{1} << 24);

/// r lies in GF(q) + span_{F_p}{sigma^i(y)}.
bool in_root_space(const FieldElem& r, const FieldElem& y);

}  // namespace as90::artin_schreier
