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

#ifndef MW_MACKEY_CERTIFY_HPP
#define MW_MACKEY_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <mw/core/arith.hpp>
#include <mw/core/poly.hpp>
#include <mw/ff/factor.hpp>
#include <mw/ff/maps.hpp>
#include <mw/mackey/certificate.hpp>

namespace mw::mackey {

namespace detail {

inline Term single_symbol(const FieldRef &k, unsigned r, unsigned n, Int modulus, Symbol s)
{
    Term t;
    t.base = k;
    t.r = r;
    t.n = n;
    t.modulus = std::move(modulus);
    t.entries.push_back({1, std::move(s)});
    validate_term(t);
    return t;
}

inline std::vector<Elem> last_coordinate(unsigned r, Elem a)
{
    std::vector<Elem> v(r, 0);
    v[r - 1] = a;
    return v;
}

inline Int int_pow(std::uint64_t p, unsigned r)
{
    Int out = 1;
    for (unsigned i = 0; i < r; ++i) {
        out *= p;
    }
    return out;
}

inline void require(bool cond, const char *what)
{
    if (!cond) {
        throw DomainError(what);
    }
}

} // namespace detail

// {a, 1 - a, c_3, ..., c_n}_{K/k} is zero modulo l. G_m-only term.
inline Certificate steinberg_certificate(const FieldRef &k, const FieldRef &K, Elem a, std::uint64_t l,
                                         const std::vector<Elem> &others = {}, std::uint64_t seed = 0)
{
    using detail::require;
    require(is_prime(l), "steinberg_certificate: l must be prime");
    require(k->is_subtower_of(*K), "steinberg_certificate: base is not a subtower");
    require(K->contains(a) && a != 0 && a != 1, "steinberg_certificate: a and 1 - a must be units");
    const Elem b = K->sub(K->one(), a);
    std::vector<Elem> slots{a, b};
    slots.insert(slots.end(), others.begin(), others.end());
    Certificate c;
    c.initial = detail::single_symbol(k, 0, static_cast<unsigned>(slots.size()), Int(l), {K, {}, slots});
    const Int L(l);

    if (l == K->characteristic()) {
        // 1 - a = (1 - a^{1/p})^p
        const Elem root = K->pth_root(a);
        c.moves.push_back({MoveKind::ScalarStep, 0, 1, 0, {}, {K->sub(K->one(), root)}, L});
        c.moves.push_back({MoveKind::DropModulus, 0, 0, 0, {}, {}, 0});
        return c;
    }

    ff::FPoly f(l + 1, 0);
    f[0] = K->neg(a);
    f[l] = K->one();
    const auto rts = ff::roots(*K, f, seed);
    if (!rts.empty()) {
        c.moves.push_back({MoveKind::ScalarStep, 0, 0, 0, {}, {rts.front()}, L});
        c.moves.push_back({MoveKind::DropModulus, 0, 0, 0, {}, {}, 0});
        return c;
    }

    // T^l - a = prod f_i and 1 - a = prod f_i(1) = prod N(1 - alpha_i).
    const auto fz = ff::factor_poly(*K, f, seed);
    std::vector<Elem> values;
    for (const auto &fc : fz.factors) {
        values.push_back(poly::eval(*K, fc.poly, K->one()));
    }
    Elem rest = b;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        rest = K->mul(rest, K->inv(values[i]));
        c.moves.push_back({MoveKind::Split, i, 1, 0, {}, {values[i], rest}, 0});
    }
    for (const auto &fc : fz.factors) {
        const auto Ki = Field::extend(K, fc.poly, {}, false);
        const Elem alpha = Ki->generator();
        c.moves.push_back({MoveKind::PfExpand, 0, 1, 0, Ki, {Ki->sub(Ki->one(), alpha)}, 0});
        c.moves.push_back({MoveKind::ScalarStep, 0, 0, 0, {}, {alpha}, L});
        c.moves.push_back({MoveKind::DropModulus, 0, 0, 0, {}, {}, 0});
    }
    return c;
}

// {V^{r-1}[a], a, b_2, ...}_{K/k} vanishes modulo wp; at r = 1 this is {a, a, ...}.
inline Certificate as_vanishing_certificate(const FieldRef &k, const FieldRef &K, unsigned r, Elem a,
                                            const std::vector<Elem> &others = {}, std::uint64_t seed = 0)
{
    using detail::require;
    require(r >= 1, "as_vanishing_certificate: r must be positive");
    require(k->is_subtower_of(*K), "as_vanishing_certificate: base is not a subtower");
    require(K->contains(a), "as_vanishing_certificate: a outside the symbol field");
    Certificate c;
    if (a == 0) {
        // {0, b_1, ...} with any units: wp(0) = 0.
        std::vector<Elem> units{K->one()};
        units.insert(units.end(), others.begin(), others.end());
        c.initial = detail::single_symbol(k, r, static_cast<unsigned>(units.size() + 1), 0,
                                          {K, std::vector<Elem>(r, 0), units});
        c.moves.push_back({MoveKind::WpRelation, 0, 0, 0, {}, std::vector<Elem>(r, 0), 0});
        return c;
    }
    std::vector<Elem> units{a};
    units.insert(units.end(), others.begin(), others.end());
    c.initial = detail::single_symbol(k, r, static_cast<unsigned>(units.size() + 1), 0,
                                      {K, detail::last_coordinate(r, a), units});
    const std::uint64_t p = K->characteristic();
    ff::FPoly f(p + 1, 0);
    f[0] = K->neg(a);
    f[1] = K->neg(K->one());
    f[p] = K->one();
    const auto rts = ff::roots(*K, f, seed);
    if (!rts.empty()) {
        c.moves.push_back({MoveKind::WpRelation, 0, 0, 0, {}, detail::last_coordinate(r, rts.front()), 0});
        return c;
    }
    // f is irreducible; its root alpha has norm a and wp(alpha) = a.
    const auto L = Field::extend(K, f, {}, false);
    const Elem alpha = L->generator();
    c.moves.push_back({MoveKind::PfExpand, 0, 1, 0, L, {alpha}, 0});
    c.moves.push_back({MoveKind::WpRelation, 0, 0, 0, {}, detail::last_coordinate(r, alpha), 0});
    return c;
}

// {a, b, b, c_3, ...}_{K/k}: b = c^{p^r}, then p^r kills the Witt slot.
inline Certificate repeated_slot_certificate(const FieldRef &k, const FieldRef &K, unsigned r,
                                             const std::vector<Elem> &a, Elem b, const std::vector<Elem> &others = {})
{
    using detail::require;
    require(r >= 1 && a.size() == r, "repeated_slot_certificate: Witt slot must have length r");
    require(K->contains(b) && b != 0, "repeated_slot_certificate: b must be a unit");
    std::vector<Elem> units{b, b};
    units.insert(units.end(), others.begin(), others.end());
    Certificate c;
    c.initial = detail::single_symbol(k, r, static_cast<unsigned>(units.size() + 1), 0, {K, a, units});
    const Int pr = detail::int_pow(K->characteristic(), r);
    const Elem root = ff::prime_to_p_root(*K, b, pr);
    c.moves.push_back({MoveKind::ScalarStep, 0, 1, 0, {}, {root}, pr});
    c.moves.push_back({MoveKind::ScaleIntoSlot, 0, 0, 0, {}, {}, pr});
    c.moves.push_back({MoveKind::DropTrivial, 0, 0, 0, {}, {}, 0});
    return c;
}

// Any term with a Witt slot and n >= 2 over finite fields vanishes.
inline Certificate perfect_vanishing_certificate(const Term &t)
{
    validate_term(t);
    detail::require(t.r >= 1 && t.n >= 2, "perfect_vanishing_certificate: needs r >= 1 and n >= 2");
    Certificate c;
    c.initial = t;
    const Int pr = detail::int_pow(t.base->characteristic(), t.r);
    for (const auto &e : t.entries) {
        bool trivial = e.coeff == 0;
        for (auto u : e.sym.units) {
            trivial = trivial || u == 1;
        }
        bool zero = true;
        for (auto x : e.sym.witt) {
            zero = zero && x == 0;
        }
        if (trivial || zero) {
            c.moves.push_back({MoveKind::DropTrivial, 0, 0, 0, {}, {}, 0});
            continue;
        }
        const Elem root = ff::prime_to_p_root(*e.sym.field, e.sym.units[0], pr);
        c.moves.push_back({MoveKind::ScalarStep, 0, 1, 0, {}, {root}, pr});
        c.moves.push_back({MoveKind::ScaleIntoSlot, 0, 0, 0, {}, {}, e.coeff * pr});
        c.moves.push_back({MoveKind::DropTrivial, 0, 0, 0, {}, {}, 0});
    }
    return c;
}

} // namespace mw::mackey

#endif
