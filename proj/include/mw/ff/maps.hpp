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

#ifndef MW_FF_MAPS_HPP
#define MW_FF_MAPS_HPP

#include <cstdint>
#include <numeric>

#include <mw/core/arith.hpp>
#include <mw/ff/field.hpp>

namespace mw::ff {

inline Elem frobenius(const Field &f, Elem x)
{
    return f.frobenius(x);
}

// x -> x^{|K|}, the generator of Gal(L/K).
inline Elem relative_frobenius(const Field &L, const Field &K, Elem x)
{
    return L.pow(x, Int(K.order()));
}

inline void require_member(const Field &K, Elem x, const char *what)
{
    if (!K.contains(x)) {
        throw Error(std::string(what) + " does not land in " + K.spec());
    }
}

inline Elem norm(const Field &L, const Field &K, Elem x)
{
    const auto n = relative_degree(L, K);
    Elem acc = L.one(), c = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc = L.mul(acc, c);
        c = relative_frobenius(L, K, c);
    }
    require_member(K, acc, "norm");
    return acc;
}

inline Elem trace_field(const Field &L, const Field &K, Elem x)
{
    const auto n = relative_degree(L, K);
    Elem acc = L.zero(), c = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc = L.add(acc, c);
        c = relative_frobenius(L, K, c);
    }
    require_member(K, acc, "trace");
    return acc;
}

// The unique c with c^e = b when gcd(e, q-1) = 1.
inline Elem prime_to_p_root(const Field &K, Elem b, const Int &e)
{
    if (b == 0) {
        throw DomainError("prime_to_p_root of zero");
    }
    const std::uint64_t n = K.order() - 1;
    const auto em = static_cast<std::uint64_t>(mod_floor(e, Int(n)));
    std::uint64_t inv = 1;
    if (n > 1) {
        if (std::gcd(em, n) != 1) {
            throw DomainError("exponent not invertible modulo q-1");
        }
        inv = inv_mod(em, n);
    }
    const Elem c = K.pow(b, Int(inv));
    if (K.pow(c, e) != b) {
        throw Error("prime_to_p_root verification failed");
    }
    return c;
}

} // namespace mw::ff

#endif
