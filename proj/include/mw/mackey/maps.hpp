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

#ifndef MW_MACKEY_MAPS_HPP
#define MW_MACKEY_MAPS_HPP

#include <vector>

#include <mw/abgrp/group.hpp>
#include <mw/ff/embed.hpp>
#include <mw/kato/presentation.hpp>
#include <mw/mackey/term.hpp>

namespace mw::mackey {

// An element of a finite abelian group given by invariant factors; coords
// are reduced modulo each factor (a 0 factor means Z).
struct GroupValue {
    std::vector<Int> invariants;
    abgrp::Vec coords;

    bool is_zero() const
    {
        for (const auto &c : coords) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }
    bool operator==(const GroupValue &o) const
    {
        return invariants == o.invariants && coords == o.coords;
    }
};

inline Int reduce_mod(const Int &x, const Int &m)
{
    return m == 0 ? x : mod_floor(x, m);
}

// Image in K_n^M(k)/m via the norm: Z at n = 0, k^x at n = 1, zero above.
inline GroupValue pi_map(const Term &t, const Int &m)
{
    validate_term(t);
    if (t.r != 0) {
        throw DomainError("pi_map needs a G_m-only term");
    }
    const auto &k = *t.base;
    if (t.n == 0) {
        Int v = 0;
        for (const auto &e : t.entries) {
            v += e.coeff * Int(ff::relative_degree(*e.sym.field, k));
        }
        if (m == 1) {
            return {};
        }
        return {{m}, {reduce_mod(v, m)}};
    }
    if (t.n >= 2) {
        return {};
    }
    const Int g = mw::gcd(m, Int(k.order() - 1));
    if (g == 1) {
        return {};
    }
    Int v = 0;
    for (const auto &e : t.entries) {
        const Elem nrm = ff::norm(*e.sym.field, k, e.sym.units[0]);
        v += e.coeff * Int(k.log(nrm));
    }
    return {{g}, {mod_floor(v, g)}};
}

// Image in the Kato group of the base: Tr_{K/k} then the class map.
inline GroupValue t_map(const Term &t, const kato::Bounds &b = {})
{
    validate_term(t);
    if (t.r == 0 || t.n < 1) {
        throw DomainError("t_map needs a Witt slot");
    }
    const auto P = kato::build_presentation(t.base, t.r, t.n, b);
    GroupValue out{P->invariants(), {}};
    if (t.n >= 2) {
        if (!out.invariants.empty()) {
            throw DomainError("t_map in degree >= 2 needs a trivial target group");
        }
        return out;
    }
    const auto Wk = witt_ring(t.base, t.r);
    abgrp::Vec acc(P->presentation().rank(), 0);
    for (const auto &e : t.entries) {
        const auto tr = witt::witt_trace(witt_ring(e.sym.field, t.r), Wk, e.sym.witt);
        const auto v = P->tensor_element(tr, {});
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += e.coeff * v[i];
        }
    }
    out.coords = P->reduce(acc);
    return out;
}

inline Term wp_term(Term t)
{
    validate_term(t);
    if (t.r == 0) {
        throw DomainError("wp_term needs a Witt slot");
    }
    for (auto &e : t.entries) {
        e.sym.witt = witt::wp(witt_ring(e.sym.field, t.r), e.sym.witt);
    }
    return t;
}

// tr_{K'/K}: relabels the base.
inline Term tr_term(const FieldRef &K, Term t)
{
    validate_term(t);
    if (!K->is_subtower_of(*t.base)) {
        throw DomainError("tr_term: " + K->spec() + " is not below " + t.base->spec());
    }
    t.base = K;
    return t;
}

// res_{K'/K}: each symbol over L splits along L (x)_K K'.
inline Term res_term(const FieldRef &Kp, const Term &t)
{
    validate_term(t);
    if (!t.base->is_subtower_of(*Kp)) {
        throw DomainError("res_term: " + t.base->spec() + " is not below " + Kp->spec());
    }
    Term out;
    out.base = Kp;
    out.r = t.r;
    out.n = t.n;
    out.modulus = t.modulus;
    for (const auto &e : t.entries) {
        for (const auto &comp : ff::tensor_decompose(e.sym.field, Kp, t.base)) {
            Symbol s{comp.field, {}, {}};
            for (auto x : e.sym.witt) {
                s.witt.push_back(comp.from_l(x));
            }
            for (auto u : e.sym.units) {
                s.units.push_back(comp.from_l(u));
            }
            out.entries.push_back({e.coeff * comp.multiplicity, std::move(s)});
        }
    }
    return out;
}

} // namespace mw::mackey

#endif
