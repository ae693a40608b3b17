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

// Dense matrices over F_p, sized for desk-scale field degrees.

#pragma once

#include <optional>
#include <vector>

#include "as90/intmath.hpp"
#include "as90/prime_poly.hpp"

namespace as90 {

class PrimeMatrix {
public:
    PrimeMatrix(u64 p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static PrimeMatrix identity(u64 p, std::size_t n);
    /// Companion matrix of a monic polynomial of degree >= 1.
    static PrimeMatrix companion(const PrimePoly& monic);

    u64 p() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    u64& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    u64 operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    PrimeMatrix operator*(const PrimeMatrix& rhs) const;
    PrimeMatrix operator-(const PrimeMatrix& rhs) const;
    std::vector<u64> apply(const std::vector<u64>& v) const;

    friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

private:
    u64 p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<u64> data_;
};

PrimeMatrix kronecker(const PrimeMatrix& a, const PrimeMatrix& b);

std::size_t rank(PrimeMatrix m);

/// Basis of {v : m v = 0}, in reduced-echelon order (free variables ascending).
std::vector<std::vector<u64>> nullspace(PrimeMatrix m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<u64>> solve(PrimeMatrix m, const std::vector<u64>& b);

/// det(t I - m), via reduction to upper Hessenberg form.
PrimePoly characteristic_polynomial(PrimeMatrix m);

}  // namespace as90
