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

// Periods of partial-trace sequences x_i = sum_{j<i} sigma^j z.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "as90/field.hpp"

namespace as90::periodicity {

struct PartialTraceSeq {
    std::vector<FieldElem> terms;  ///< x_0 .. x_{2pe-1}
    u64 p;
    unsigned e;  ///< |F(z):F|
    u64 period;
    FieldElem z;
};

/// Least d <= bound with x_i = x_{i+d} wherever both are stored. The list
/// should hold at least 2 * bound terms. Throws NoPeriodWithinBound.
u64 sequence_period(std::span<const FieldElem> seq, u64 bound);

/// Least divisor d of `multiple` that is a period of the stored terms.
/// Throws NoPeriodWithinBound when `multiple` itself is not a period.
u64 period_dividing(std::span<const FieldElem> seq, u64 multiple);

/// Two full periods p*e of the sequence for z, with the measured period.
/// Throws FieldTooLarge beyond 2^24 terms.
PartialTraceSeq build_sequence(const FieldElem& z, i64 k = 1);

struct PeriodReport {
    unsigned e;
    u64 n_p;
    u64 period;
    u64 expected;           ///< p * e
    bool interior_nonzero;  ///< x_l != 0 for 0 < l < pe
    bool pass;
};

/// Measures the period of the partial traces of z and checks it equals
/// p*e with n_p | e. Throws TraceNotOne.
PeriodReport verify_period_theorem(const FieldElem& z, i64 k = 1);

/// {"e":..,"n_p":..,"period":..,"pass":..}
std::string to_json(const PeriodReport& report);

}  // namespace as90::periodicity
