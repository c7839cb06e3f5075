// Copyright 2026 The mw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MW_CORE_LINALG_HPP
#define MW_CORE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <mw/core/error.hpp>

// Gaussian elimination over a field context (see mw/core/poly.hpp).
namespace mw::linalg {

template <class F>
using Matrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
typename F::Elem det(const F &f, Matrix<F> a)
{
    const std::size_t n = a.size();
    auto d = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && f.is_zero(a[piv][col])) {
            ++piv;
        }
        if (piv == n) {
            return f.zero();
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = f.neg(d);
        }
        d = f.mul(d, a[col][col]);
        const auto inv = f.inv(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (f.is_zero(a[r][col])) {
                continue;
            }
            const auto c = f.mul(a[r][col], inv);
            for (std::size_t k = col; k < n; ++k) {
                a[r][k] = f.sub(a[r][k], f.mul(c, a[col][k]));
            }
        }
    }
    return d;
}

// Solves a x = b for square invertible a; nullopt if singular.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F &f, Matrix<F> a, std::vector<typename F::Elem> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && f.is_zero(a[piv][col])) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const auto inv = f.inv(a[col][col]);
        for (std::size_t k = col; k < n; ++k) {
            a[col][k] = f.mul(a[col][k], inv);
        }
        b[col] = f.mul(b[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || f.is_zero(a[r][col])) {
                continue;
            }
            const auto c = a[r][col];
            for (std::size_t k = col; k < n; ++k) {
                a[r][k] = f.sub(a[r][k], f.mul(c, a[col][k]));
            }
            b[r] = f.sub(b[r], f.mul(c, b[col]));
        }
    }
    return b;
}

template <class F>
std::optional<Matrix<F>> inverse(const F &f, const Matrix<F> &a)
{
    const std::size_t n = a.size();
    Matrix<F> out(n, std::vector<typename F::Elem>(n, f.zero()));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<typename F::Elem> e(n, f.zero());
        e[j] = f.one();
        auto col = solve(f, a, std::move(e));
        if (!col) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < n; ++i) {
            out[i][j] = (*col)[i];
        }
    }
    return out;
}

} // namespace mw::linalg

#endif
