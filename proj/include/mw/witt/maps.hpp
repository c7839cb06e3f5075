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

#ifndef MW_WITT_MAPS_HPP
#define MW_WITT_MAPS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>
#include <mw/ff/embed.hpp>
#include <mw/ff/field.hpp>
#include <mw/ff/maps.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/laws.hpp>
#include <mw/witt/ring.hpp>

namespace mw::witt {

// w_s = sum_{d | s} d x_d^{s/d}.
inline std::vector<Int> ghost(const IntWitt &W, const IntWitt::Vector &x)
{
    W.check(x);
    const auto &S = W.tset().elements();
    std::vector<Int> w(S.size(), 0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (S[i] % S[j] == 0) {
                w[i] += Int(S[j]) * boost::multiprecision::pow(x[j], static_cast<unsigned>(S[i] / S[j]));
            }
        }
    }
    return w;
}

// V_n : W_{S/n} -> W_S. W is the ring on S; x lives on S/n.
template <class C>
typename WittRing<C>::Vector verschiebung(const WittRing<C> &W, std::uint64_t n, const typename WittRing<C>::Vector &x)
{
    const auto T = trunc::quotient(W.tset(), n);
    if (!T) {
        throw DomainError("V_" + std::to_string(n) + " undefined: S/n is empty");
    }
    if (x.size() != T->size()) {
        throw DomainError("V_n input must live on S/n");
    }
    auto out = W.zero();
    for (std::size_t i = 0; i < W.size(); ++i) {
        const auto s = W.tset().elements()[i];
        if (s % n == 0) {
            out[i] = x[T->index_of(s / n)];
        }
    }
    return out;
}

// R^S_T: coordinate projection onto T.
template <class C>
typename WittRing<C>::Vector restrict_to(const WittRing<C> &W, const TruncationSet &T,
                                         const typename WittRing<C>::Vector &x)
{
    W.check(x);
    if (!T.subset_of(W.tset())) {
        throw DomainError("restriction target {" + T.to_string() + "} is not contained in {" + W.tset().to_string() +
                          "}");
    }
    typename WittRing<C>::Vector out;
    for (auto t : T.elements()) {
        out.push_back(x[W.tset().index_of(t)]);
    }
    return out;
}

// F_n : W_S -> W_{S/n} through the universal law.
template <class C>
typename WittRing<C>::Vector frobenius_n(const WittRing<C> &W, std::uint64_t n, const typename WittRing<C>::Vector &x)
{
    W.check(x);
    if constexpr (is_field_coeff<C>) {
        const auto law = LawCache::instance().compiled_frobenius(W.tset(), n, W.coeff().characteristic());
        typename WittRing<C>::Vector out;
        for (const auto &g : *law) {
            out.push_back(eval_compiled(W.coeff(), g, x));
        }
        return out;
    } else {
        const auto law = LawCache::instance().frobenius(W.tset(), n);
        typename WittRing<C>::Vector out;
        for (const auto &g : law->coords) {
            out.push_back(g.eval(W.coeff(), x));
        }
        return out;
    }
}

// Componentwise image under a coefficient map.
template <class F>
FieldWitt::Vector map_coords(const FieldWitt::Vector &x, F f)
{
    FieldWitt::Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = f(x[i]);
    }
    return out;
}

// W_S(phi) for the absolute Frobenius phi.
inline FieldWitt::Vector frobenius_coords(const FieldWitt &W, const FieldWitt::Vector &x)
{
    W.check(x);
    return map_coords(x, [&](ff::Elem a) { return W.coeff().frobenius(a); });
}

// In characteristic p: F_p = R^S_{S/p} composed with W_S(phi).
inline FieldWitt::Vector frobenius_p_char(const FieldWitt &W, const FieldWitt::Vector &x)
{
    const auto p = W.coeff().characteristic();
    const auto T = trunc::quotient(W.tset(), p);
    if (!T) {
        throw DomainError("F_p undefined: S/p is empty");
    }
    return restrict_to(W, *T, frobenius_coords(W, x));
}

// p times the zero-padded lift of x to pS.
template <class C>
typename WittRing<C>::Vector p_underline(const WittRing<C> &W, std::uint64_t p, const typename WittRing<C>::Vector &x)
{
    W.check(x);
    const auto pS = trunc::p_extend(W.tset(), p);
    const WittRing<C> Wp(pS, W.coeff_ref());
    auto lift = Wp.zero();
    for (std::size_t i = 0; i < W.size(); ++i) {
        lift[pS.index_of(W.tset().elements()[i])] = x[i];
    }
    return Wp.scale(Int(p), lift);
}

inline void require_p_typical(const FieldWitt &W)
{
    if (!trunc::is_p_typical(W.tset(), W.coeff().characteristic())) {
        throw DomainError("operation needs a p-typical truncation set, got {" + W.tset().to_string() + "}");
    }
}

// The Artin-Schreier-Witt operator F - id on W_r(k).
inline FieldWitt::Vector wp(const FieldWitt &W, const FieldWitt::Vector &x)
{
    require_p_typical(W);
    return W.sub(frobenius_coords(W, x), x);
}

// Tr_{L/K} on W_S: the sum of the Galois conjugates. WL and WK share S.
inline FieldWitt::Vector witt_trace(const FieldWitt &WL, const FieldWitt &WK, const FieldWitt::Vector &x)
{
    WL.check(x);
    if (!(WL.tset() == WK.tset())) {
        throw DomainError("witt_trace between different truncation sets");
    }
    const auto &L = WL.coeff();
    const auto &K = WK.coeff();
    const auto n = ff::relative_degree(L, K);
    auto acc = WL.zero();
    auto c = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc = WL.add(acc, c);
        c = map_coords(c, [&](ff::Elem a) { return ff::relative_frobenius(L, K, a); });
    }
    for (auto a : acc) {
        ff::require_member(K, a, "Witt trace");
    }
    return acc;
}

// W_S of a field embedding.
inline FieldWitt::Vector witt_map(const ff::Embedding &e, const FieldWitt::Vector &x)
{
    return map_coords(x, [&](ff::Elem a) { return e(a); });
}

} // namespace mw::witt

#endif
