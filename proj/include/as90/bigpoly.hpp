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

// Big and small polynomials, cyclotomic factorization, composed products and
// the search for big primitive polynomials.

#pragma once

#include <string>
#include <vector>

#include "as90/prime_poly.hpp"

namespace as90::bigpoly {

enum class Size { big, small };

struct BigClass {
    Size value;
    int degree;
    u64 leading;
    u64 subleading;  ///< zero for constants
};

/// Big: constant, or both top coefficients nonzero. Throws ZeroPolynomial.
BigClass classify(const PrimePoly& f);
bool is_big(const PrimePoly& f);

/// Least e >= 1 with p^e = 1 mod r. Throws EqualPrimes or NotPrime.
unsigned ord_mod(u64 r, u64 p);

/// 1 + t + ... + t^{r-1} over F_p.
PrimePoly cyclotomic_prime(u64 r, u64 p);

/// Phi_m over F_p for any m >= 1, by dividing t^m - 1 by Phi_d for d | m, d < m.
PrimePoly cyclotomic(u64 m, u64 p);

/// Irreducible factors of Phi_r over F_p, sorted by lex order.
std::vector<PrimePoly> factor_cyclotomic(u64 r, u64 p);

/// Trace over F_p of a root of an irreducible f, read off as minus the
/// subleading coefficient of monic(f). Nonzero exactly when f is big.
u64 root_trace(const PrimePoly& f);

/// The polynomial whose roots are all products alpha_i * beta_j, with
/// leading coefficient a_m^n b_n^m. Throws ZeroPolynomial.
PrimePoly tensor_product(const PrimePoly& a, const PrimePoly& b);

/// First monic irreducible of degree e, in lex order (constant term most
/// significant), that is big and primitive. At most `budget` candidates are
/// tested for irreducibility. Throws NotFound or FactorizationTooHard.
PrimePoly find_big_primitive(unsigned e, u64 p = 2, u64 budget = u64{1} << 20);

struct TableCheck {
    std::string name;
    bool pass;
};

struct TableReport {
    unsigned n2;
    PrimePoly candidate;
    std::vector<TableCheck> checks;  ///< degree, irreducible, big, order, trace, period

    bool pass() const;
};

/// The six checks a table row must satisfy over F_2.
TableReport verify_table_entry(unsigned n2, const PrimePoly& candidate);

struct TableRow {
    unsigned n2;
    std::string symbol;
    PrimePoly poly;
};

/// Big primitive minimal polynomials for n_2 = 2, 4, 8, 16, 32. The n_2 = 16
/// row is t^16+t^15+t^4+t+1: its root is primitive and reproduces the
/// published exponent list for that case.
const std::vector<TableRow>& table_rows();

/// The rows exactly as published. They differ from table_rows() only at
/// n_2 = 16, where the printed t^16+t^15+t^8+t+1 is irreducible with trace 1
/// but its roots have order 257.
const std::vector<TableRow>& printed_table_rows();

/// The table polynomial for n_2, or NotFound.
const PrimePoly& table_polynomial(unsigned n2);

/// Tab-separated rows: n_2, symbol, minimal polynomial.
std::string format_table(const std::vector<TableRow>& rows);

/// Rows rebuilt with find_big_primitive in place of the stored polynomials.
std::vector<TableRow> regenerate_table(u64 budget = u64{1} << 20);

}  // namespace as90::bigpoly
