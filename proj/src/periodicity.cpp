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

#include "as90/periodicity.hpp"

#include "json.hpp"

#include "as90/error.hpp"
#include "as90/hilbert90.hpp"

namespace as90::periodicity {

namespace {

constexpr u64 kMaxTerms = u64{1} << 24;

bool is_period(std::span<const FieldElem> seq, u64 d) {
    for (std::size_t i = 0; i + d < seq.size(); ++i) {
        if (!(seq[i] == seq[i + d])) return false;
    }
    return true;
}

}  // namespace

u64 sequence_period(std::span<const FieldElem> seq, u64 bound) {
    for (u64 d = 1; d <= bound; ++d) {
        if (is_period(seq, d)) return d;
    }
    throw Error(ErrorCode::NoPeriodWithinBound, "no period up to " + std::to_string(bound));
}

u64 period_dividing(std::span<const FieldElem> seq, u64 multiple) {
    for (u64 d : divisors(multiple)) {
        if (is_period(seq, d)) return d;
    }
    throw Error(ErrorCode::NoPeriodWithinBound, std::to_string(multiple) + " is not a period");
}

PartialTraceSeq build_sequence(const FieldElem& z, i64 k) {
    const unsigned e = degree_over_base(z);
    const u64 p = z.ctx().p();
    if (p > kMaxTerms / (2 * e)) {
        throw Error(ErrorCode::FieldTooLarge, "sequence of period " + std::to_string(p) + "*" + std::to_string(e) +
                                                  " is too long to materialize");
    }
    auto terms = hilbert90::partial_trace_sequence(z, 2 * p * e, k);
    const u64 period = period_dividing(terms, p * e);
    return {std::move(terms), p, e, period, z};
}

PeriodReport verify_period_theorem(const FieldElem& z, i64 k) {
    if (!trace_to_base(z).is_one()) throw Error(ErrorCode::TraceNotOne, "Tr(z) = " + to_string(trace_to_base(z)));
    const PartialTraceSeq seq = build_sequence(z, k);
    const u64 n_p = hilbert90::p_part(z.ctx().relative_degree(), seq.p).n_p;
    const u64 expected = seq.p * seq.e;
    bool interior_nonzero = true;
    for (u64 l = 1; l < expected; ++l) interior_nonzero = interior_nonzero && !seq.terms[l].is_zero();
    const bool pass = seq.period == expected && seq.e % n_p == 0 && interior_nonzero;
    return {seq.e, n_p, seq.period, expected, interior_nonzero, pass};
}

std::string to_json(const PeriodReport& report) {
    nlohmann::ordered_json j;
    j["e"] = report.e;
    j["n_p"] = report.n_p;
    j["period"] = report.period;
    j["pass"] = report.pass;
    return j.dump();
}

}  // namespace as90::periodicity
