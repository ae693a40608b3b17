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

// Additive Hilbert 90 for the cyclic extension E/F of a FieldCtx: trace-one
// witnesses, the form R(y, z) and its certificates.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "as90/field.hpp"

namespace as90::hilbert90 {

struct PPart {
    u64 n_p;        ///< largest power of p dividing n
    u64 n_p_prime;  ///< n / n_p

    friend bool operator==(const PPart&, const PPart&) = default;
};

PPart p_part(u64 n, u64 p);

enum class WitnessMethod { deterministic, random };

struct TraceOneWitness {
    FieldElem z;
    unsigned e;              ///< |F(z):F|
    std::string provenance;  ///< "deterministic-subfield" or "random-scaled"
};

/// An element z with Tr^E_F(z) = 1 and |F(z):F| = target_e (default n_p,
/// the p-part of |E:F|). The deterministic method scans GF(q^e) in
/// coordinate order; the random one draws from it with the given seed and
/// gives up after 64 draws.
///
/// Throws NoSuchDegree unless n_p | target_e | |E:F|.
TraceOneWitness find_trace_one(const FieldCtx& ctx, std::optional<unsigned> target_e = std::nullopt,
                               WitnessMethod method = WitnessMethod::deterministic, u64 seed = 0);

/// x_0 .. x_{length-1} with x_i = sum_{j<i} sigma^{kj}(z).
std::vector<FieldElem> partial_trace_sequence(const FieldElem& z, std::size_t length, i64 k = 1);

struct RootCertificate {
    FieldElem y;
    FieldElem z;
    FieldElem x;
    i64 k;         ///< the generator sigma^k used
    bool checked;  ///< sigma^k(x) - x = y was recomputed and holds
};

/// R(y, z) = sum_i x_i sigma^{ki}(y) with the partial traces x_i of z.
/// Requires Tr(y) = 0 (TraceNotZero) and Tr(z) = 1 (TraceNotOne); k must be
/// a unit modulo |E:F| (InvalidArgument).
RootCertificate r_form(const FieldElem& y, const FieldElem& z, i64 k = 1);

/// R(a, b) without any trace preconditions.
FieldElem r_raw(const FieldElem& a, const FieldElem& b, i64 k = 1);

struct SymmetryReport {
    FieldElem defect;  ///< R(y,z) + R(z,y) + Tr(yz), always zero
    bool forward_ok;   ///< sigma R(y,z) - R(y,z) = y
    bool reverse_ok;   ///< R(z,y) - sigma R(z,y) = y
};

SymmetryReport r_symmetry_defect(const FieldElem& y, const FieldElem& z, i64 k = 1);

/// field=...;y=...;z=...;x=...;k=1;verified=true
std::string serialize(const RootCertificate& cert);

}  // namespace as90::hilbert90
