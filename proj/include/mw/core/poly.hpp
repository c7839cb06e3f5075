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

#ifndef MW_CORE_POLY_HPP
#define MW_CORE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>

// Dense univariate polynomials over an arbitrary field context.
//
// A field context F exposes a nested Elem type together with zero(), one(),
// add, sub, neg, mul, inv, is_zero and eq. Polynomials are coefficient
// vectors, lowest degree first, with no trailing zeros.
namespace mw::poly {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F &f, Poly<F> &a)
{
    while (!a.empty() && f.is_zero(a.back())) {
        a.pop_back();
    }
}

template <class F>
int degree(const Poly<F> &a)
{
    return static_cast<int>(a.size()) - 1;
}

template <class F>
bool is_zero(const Poly<F> &a)
{
    return a.empty();
}

template <class F>
bool equal(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!f.eq(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

template <class F>
Poly<F> constant(const F &f, typename F::Elem c)
{
    Poly<F> r;
    if (!f.is_zero(c)) {
        r.push_back(std::move(c));
    }
    return r;
}

// c * x^k
template <class F>
Poly<F> monomial(const F &f, typename F::Elem c, std::size_t k)
{
    if (f.is_zero(c)) {
        return {};
    }
    Poly<F> r(k + 1, f.zero());
    r[k] = std::move(c);
    return r;
}

template <class F>
Poly<F> x_poly(const F &f)
{
    return monomial(f, f.one(), 1);
}

template <class F>
Poly<F> add(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    const Poly<F> &lo = a.size() < b.size() ? a : b;
    Poly<F> r = a.size() < b.size() ? b : a;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        r[i] = f.add(r[i], lo[i]);
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> neg(const F &f, const Poly<F> &a)
{
    Poly<F> r;
    r.reserve(a.size());
    for (const auto &c : a) {
        r.push_back(f.neg(c));
    }
    return r;
}

template <class F>
Poly<F> sub(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = f.sub(r[i], b[i]);
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> scale(const F &f, const Poly<F> &a, const typename F::Elem &c)
{
    if (f.is_zero(c)) {
        return {};
    }
    Poly<F> r;
    r.reserve(a.size());
    for (const auto &x : a) {
        r.push_back(f.mul(x, c));
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> mul(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> shift(const F &f, const Poly<F> &a, std::size_t k)
{
    if (a.empty()) {
        return {};
    }
    Poly<F> r(k, f.zero());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    if (b.empty()) {
        throw DomainError("polynomial division by zero");
    }
    if (a.size() < b.size()) {
        return {{}, a};
    }
    Poly<F> rem = a;
    Poly<F> quo(a.size() - b.size() + 1, f.zero());
    const auto lead_inv = f.inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (f.is_zero(rem[i])) {
            continue;
        }
        const auto c = f.mul(rem[i], lead_inv);
        const std::size_t off = i - (b.size() - 1);
        quo[off] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[off + j] = f.sub(rem[off + j], f.mul(c, b[j]));
        }
    }
    trim(f, quo);
    trim(f, rem);
    return {std::move(quo), std::move(rem)};
}

template <class F>
Poly<F> rem(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    return divmod(f, a, b).second;
}

template <class F>
Poly<F> quo(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    return divmod(f, a, b).first;
}

template <class F>
Poly<F> monic(const F &f, const Poly<F> &a)
{
    if (a.empty()) {
        return a;
    }
    return scale(f, a, f.inv(a.back()));
}

template <class F>
bool is_one(const F &f, const Poly<F> &a)
{
    return a.size() == 1 && f.eq(a[0], f.one());
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const F &f, Poly<F> a, Poly<F> b)
{
    while (!b.empty()) {
        auto r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F &f, const Poly<F> &a, const Poly<F> &b)
{
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = constant(f, f.one()), s1;
    Poly<F> t0, t1 = constant(f, f.one());
    while (!r1.empty()) {
        auto [q, r] = divmod(f, r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, sub(f, s0, mul(f, q, s1)));
        t0 = std::exchange(t1, sub(f, t0, mul(f, q, t1)));
    }
    if (r0.empty()) {
        return {r0, s0, t0};
    }
    const auto li = f.inv(r0.back());
    return {scale(f, r0, li), scale(f, s0, li), scale(f, t0, li)};
}

template <class F>
Poly<F> mulmod(const F &f, const Poly<F> &a, const Poly<F> &b, const Poly<F> &m)
{
    return rem(f, mul(f, a, b), m);
}

template <class F>
Poly<F> powmod(const F &f, Poly<F> base, const Int &e, const Poly<F> &m)
{
    Poly<F> result = rem(f, constant(f, f.one()), m);
    base = rem(f, base, m);
    if (e == 0) {
        return result;
    }
    const auto bits = boost::multiprecision::msb(e);
    for (std::size_t i = bits + 1; i-- > 0;) {
        result = mulmod(f, result, result, m);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) {
            result = mulmod(f, result, base, m);
        }
    }
    return result;
}

template <class F>
Poly<F> powmod(const F &f, const Poly<F> &base, std::uint64_t e, const Poly<F> &m)
{
    return powmod(f, base, Int(e), m);
}

template <class F>
Poly<F> pow(const F &f, const Poly<F> &base, unsigned e)
{
    Poly<F> r = constant(f, f.one());
    for (unsigned i = 0; i < e; ++i) {
        r = mul(f, r, base);
    }
    return r;
}

template <class F>
Poly<F> derivative(const F &f, const Poly<F> &a)
{
    if (a.size() <= 1) {
        return {};
    }
    Poly<F> r(a.size() - 1, f.zero());
    for (std::size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = f.mul(a[i], f.from_int(static_cast<std::int64_t>(i)));
    }
    trim(f, r);
    return r;
}

template <class F>
typename F::Elem eval(const F &f, const Poly<F> &a, const typename F::Elem &x)
{
    auto r = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) {
        r = f.add(f.mul(r, x), a[i]);
    }
    return r;
}

} // namespace mw::poly

#endif
