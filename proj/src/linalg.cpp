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

#include "as90/linalg.hpp"

#include <utility>

#include "as90/error.hpp"

namespace as90 {

PrimeMatrix PrimeMatrix::identity(u64 p, std::size_t n) {
    PrimeMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

PrimeMatrix PrimeMatrix::companion(const PrimePoly& monic) {
    if (!monic.is_monic() || monic.degree() < 1) {
        throw Error(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial of degree >= 1");
    }
    const u64 p = monic.p();
    const auto n = static_cast<std::size_t>(monic.degree());
    PrimeMatrix m(p, n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = neg_mod(monic.coeff(i), p);
    return m;
}

PrimeMatrix PrimeMatrix::operator*(const PrimeMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    PrimeMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const u64 a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) = add_mod(out(i, j), mul_mod(a, rhs(k, j), p_), p_);
            }
        }
    }
    return out;
}

PrimeMatrix PrimeMatrix::operator-(const PrimeMatrix& rhs) const {
    if (cols_ != rhs.cols_ || rows_ != rhs.rows_ || p_ != rhs.p_) {
        throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    }
    PrimeMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub_mod(data_[i], rhs.data_[i], p_);
    return out;
}

std::vector<u64> PrimeMatrix::apply(const std::vector<u64>& v) const {
    std::vector<u64> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = add_mod(acc, mul_mod((*this)(i, j), v[j], p_), p_);
        out[i] = acc;
    }
    return out;
}

PrimeMatrix kronecker(const PrimeMatrix& a, const PrimeMatrix& b) {
    const u64 p = a.p();
    PrimeMatrix out(p, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = mul_mod(a(i, j), b(k, l), p);
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(PrimeMatrix& m) {
    const u64 p = m.p();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const u64 inv = inv_mod(m(row, col), p);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = mul_mod(m(row, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const u64 factor = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sub_mod(m(i, j), mul_mod(factor, m(row, j), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(PrimeMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<u64>> nullspace(PrimeMatrix m) {
    const u64 p = m.p();
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<u64> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = neg_mod(m(r, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<u64>> solve(PrimeMatrix m, const std::vector<u64>& b) {
    PrimeMatrix aug(m.p(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i] % m.p();
    }
    const auto pivots = row_reduce(aug);
    std::vector<u64> x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;
        x[pivots[r]] = aug(r, m.cols());
    }
    return x;
}

PrimePoly characteristic_polynomial(PrimeMatrix h) {
    const u64 p = h.p();
    const std::size_t n = h.rows();
    if (n != h.cols()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");

    // Similarity transforms down to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t sel = j + 1;
        while (sel < n && h(sel, j) == 0) ++sel;
        if (sel == n) continue;
        if (sel != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(sel, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, sel), h(r, j + 1));
        }
        const u64 inv = inv_mod(h(j + 1, j), p);
        for (std::size_t k = j + 2; k < n; ++k) {
            const u64 u = mul_mod(h(k, j), inv, p);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c) h(k, c) = sub_mod(h(k, c), mul_mod(u, h(j + 1, c), p), p);
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = add_mod(h(r, j + 1), mul_mod(u, h(r, k), p), p);
        }
    }

    // chars[m] = det(t I - H[0..m, 0..m]).
    std::vector<PrimePoly> chars;
    chars.reserve(n + 1);
    chars.push_back(PrimePoly::constant(p, 1));
    const PrimePoly t = PrimePoly::variable(p);
    for (std::size_t m = 1; m <= n; ++m) {
        PrimePoly next = (t - PrimePoly::constant(p, h(m - 1, m - 1))) * chars[m - 1];
        u64 sub_product = 1;
        for (std::size_t i = 1; i < m; ++i) {
            sub_product = mul_mod(sub_product, h(m - i, m - i - 1), p);
            const u64 coef = mul_mod(h(m - i - 1, m - 1), sub_product, p);
            if (coef != 0) next -= chars[m - i - 1].scaled(coef);
        }
        chars.push_back(std::move(next));
    }
    return chars[n];
}

}  // namespace as90
