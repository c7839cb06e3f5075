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

#ifndef MW_FF_FACTOR_HPP
#define MW_FF_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <mw/core/poly.hpp>
#include <mw/core/rng.hpp>
#include <mw/ff/field.hpp>

namespace mw::ff {

using FPoly = poly::Poly<Field>;

struct Factor {
    FPoly poly; // monic irreducible
    unsigned multiplicity;
};

struct Factorization {
    Elem leading;
    std::vector<Factor> factors;
};

namespace detail {

// f(x) = g(x)^p for f with derivative zero; returns g.
inline FPoly pth_root_poly(const Field &f, const FPoly &a)
{
    const auto p = f.characteristic();
    FPoly out((a.size() + p - 1) / p, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        if (i % p != 0) {
            throw Error("p-th root of a polynomial with nonzero derivative");
        }
        out[i / p] = f.pth_root(a[i]);
    }
    poly::trim(f, out);
    return out;
}

inline void squarefree(const Field &f, FPoly a, unsigned mult, std::vector<std::pair<FPoly, unsigned>> &out)
{
    if (poly::degree<Field>(a) <= 0) {
        return;
    }
    FPoly c = poly::gcd(f, a, poly::derivative(f, a));
    FPoly w = poly::quo(f, a, c);
    unsigned i = 1;
    while (poly::degree<Field>(w) > 0) {
        FPoly y = poly::gcd(f, w, c);
        FPoly fac = poly::quo(f, w, y);
        if (poly::degree<Field>(fac) > 0) {
            out.emplace_back(poly::monic(f, fac), i * mult);
        }
        w = std::move(y);
        c = poly::quo(f, c, w);
        ++i;
    }
    if (poly::degree<Field>(c) > 0) {
        squarefree(f, pth_root_poly(f, poly::monic(f, c)), mult * static_cast<unsigned>(f.characteristic()), out);
    }
}

// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
inline std::vector<std::pair<FPoly, unsigned>> distinct_degree(const Field &f, FPoly g)
{
    std::vector<std::pair<FPoly, unsigned>> out;
    const FPoly x = poly::x_poly(f);
    FPoly h = poly::rem(f, x, g);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(poly::degree<Field>(g)); ++d) {
        h = poly::powmod(f, h, Int(f.order()), g);
        FPoly fac = poly::gcd(f, poly::sub(f, h, x), g);
        if (poly::degree<Field>(fac) > 0) {
            out.emplace_back(fac, d);
            g = poly::quo(f, g, fac);
            h = poly::rem(f, h, g);
        }
    }
    if (poly::degree<Field>(g) > 0) {
        out.emplace_back(g, static_cast<unsigned>(poly::degree<Field>(g)));
    }
    return out;
}

inline void equal_degree(const Field &f, const FPoly &g, unsigned d, Rng &rng, std::vector<FPoly> &out)
{
    const int n = poly::degree<Field>(g);
    if (n == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    Int qd = 1;
    for (unsigned i = 0; i < d; ++i) {
        qd *= f.order();
    }
    const unsigned k = f.degree();
    for (;;) {
        FPoly a(static_cast<std::size_t>(n), 0);
        for (auto &c : a) {
            c = f.random(rng);
        }
        poly::trim(f, a);
        if (poly::degree<Field>(a) <= 0) {
            continue;
        }
        FPoly b;
        if (f.characteristic() == 2) {
            // Absolute trace a + a^2 + ... + a^{2^{kd-1}}.
            FPoly t = poly::rem(f, a, g), s = t;
            for (unsigned i = 1; i < k * d; ++i) {
                t = poly::mulmod(f, t, t, g);
                s = poly::add(f, s, t);
            }
            b = s;
        } else {
            b = poly::sub(f, poly::powmod(f, a, Int((qd - 1) / 2), g), poly::constant(f, f.one()));
        }
        FPoly h = poly::gcd(f, b, g);
        const int dh = poly::degree<Field>(h);
        if (dh > 0 && dh < n) {
            equal_degree(f, h, d, rng, out);
            equal_degree(f, poly::quo(f, g, h), d, rng, out);
            return;
        }
    }
}

inline bool poly_less(const FPoly &a, const FPoly &b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace detail

// Factorization into monic irreducibles, sorted by degree then coefficients.
inline Factorization factor_poly(const Field &f, FPoly a, std::uint64_t seed = 0)
{
    poly::trim(f, a);
    if (poly::is_zero<Field>(a)) {
        throw DomainError("factor_poly of the zero polynomial");
    }
    Factorization res{a.back(), {}};
    a = poly::monic(f, a);
    std::vector<std::pair<FPoly, unsigned>> sqf;
    detail::squarefree(f, a, 1, sqf);
    Rng rng(seed ^ 0x5bd1e995u);
    for (auto &[g, m] : sqf) {
        for (auto &[h, d] : detail::distinct_degree(f, g)) {
            std::vector<FPoly> parts;
            detail::equal_degree(f, h, d, rng, parts);
            for (auto &p : parts) {
                res.factors.push_back({poly::monic(f, p), m});
            }
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const Factor &x, const Factor &y) {
        if (detail::poly_less(x.poly, y.poly)) {
            return true;
        }
        if (detail::poly_less(y.poly, x.poly)) {
            return false;
        }
        return x.multiplicity < y.multiplicity;
    });
    // Merge equal factors coming from different squarefree parts.
    std::vector<Factor> merged;
    for (auto &fc : res.factors) {
        if (!merged.empty() && merged.back().poly == fc.poly) {
            merged.back().multiplicity += fc.multiplicity;
        } else {
            merged.push_back(std::move(fc));
        }
    }
    res.factors = std::move(merged);
    return res;
}

// Distinct roots in f, in increasing code order.
inline std::vector<Elem> roots(const Field &f, const FPoly &a, std::uint64_t seed = 0)
{
    std::vector<Elem> out;
    for (const auto &fc : factor_poly(f, a, seed).factors) {
        if (fc.poly.size() == 2) {
            out.push_back(f.neg(fc.poly[0]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline FPoly expand_factorization(const Field &f, const Factorization &fz)
{
    FPoly acc = poly::constant(f, fz.leading);
    for (const auto &fc : fz.factors) {
        acc = poly::mul(f, acc, poly::pow(f, fc.poly, fc.multiplicity));
    }
    return acc;
}

} // namespace mw::ff

#endif
