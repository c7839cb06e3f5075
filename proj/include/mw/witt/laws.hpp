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

#ifndef MW_WITT_LAWS_HPP
#define MW_WITT_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/error.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/mpoly.hpp>

namespace mw::witt {

using trunc::TruncationSet;

// Largest truncation set for which universal laws are built.
inline std::size_t &law_bound()
{
    static std::size_t bound = 12;
    return bound;
}

// Universal integer polynomials of W_S. Variables 0..k-1 are the first
// argument's coordinates, k..2k-1 the second's (k = |S|).
struct Laws {
    TruncationSet tset;
    std::vector<MPoly> sum;
    std::vector<MPoly> prod;
    std::vector<MPoly> neg; // in k variables
};

// F_n : W_S -> W_{S/n}, in k variables.
struct FrobeniusLaw {
    TruncationSet source;
    TruncationSet target;
    std::uint64_t n;
    std::vector<MPoly> coords;
};

namespace detail {

// w_s = sum_{d | s} d x_d^{s/d}, variables offset by 'off'.
inline MPoly ghost_poly(const TruncationSet &S, std::uint64_t s, std::size_t nvars, std::size_t off)
{
    MPoly w(nvars);
    for (auto d : S.elements()) {
        if (d > s) {
            break;
        }
        if (s % d == 0) {
            w += MPoly::var(nvars, off + S.index_of(d), static_cast<std::uint32_t>(s / d)).scaled(Int(d));
        }
    }
    return w;
}

// Solve n x_n = target_n - sum_{d | n, d < n} d x_d^{n/d} over the set T.
template <class Target>
std::vector<MPoly> solve_ghost(const TruncationSet &T, Target target)
{
    std::vector<MPoly> out;
    out.reserve(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        const auto n = T.elements()[i];
        MPoly rhs = target(n);
        for (std::size_t j = 0; j < i; ++j) {
            const auto d = T.elements()[j];
            if (n % d == 0) {
                rhs -= out[j].pow(n / d).scaled(Int(d));
            }
        }
        out.push_back(rhs.divided_exactly(Int(n)));
    }
    return out;
}

inline void check_bound(const TruncationSet &S)
{
    if (S.size() > law_bound()) {
        throw BoundExceeded("truncation set size for Witt laws", S.size(), law_bound());
    }
}

} // namespace detail

inline Laws build_laws(const TruncationSet &S)
{
    detail::check_bound(S);
    const std::size_t k = S.size();
    Laws L{S, {}, {}, {}};
    L.sum = detail::solve_ghost(S, [&](std::uint64_t n) {
        return detail::ghost_poly(S, n, 2 * k, 0) + detail::ghost_poly(S, n, 2 * k, k);
    });
    L.prod = detail::solve_ghost(S, [&](std::uint64_t n) {
        return detail::ghost_poly(S, n, 2 * k, 0) * detail::ghost_poly(S, n, 2 * k, k);
    });
    L.neg = detail::solve_ghost(S, [&](std::uint64_t n) { return detail::ghost_poly(S, n, k, 0).scaled(Int(-1)); });
    return L;
}

inline FrobeniusLaw build_frobenius_law(const TruncationSet &S, std::uint64_t n)
{
    detail::check_bound(S);
    auto T = trunc::quotient(S, n);
    if (!T) {
        throw DomainError("F_" + std::to_string(n) + " undefined: S/n is empty");
    }
    const std::size_t k = S.size();
    auto coords = detail::solve_ghost(*T, [&](std::uint64_t t) { return detail::ghost_poly(S, n * t, k, 0); });
    return {S, *T, n, std::move(coords)};
}

// A polynomial with coefficients reduced modulo p, flattened for evaluation.
struct CompiledPoly {
    struct Term {
        std::uint64_t coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> powers; // (variable, exponent)
    };
    std::vector<Term> terms;
};

inline CompiledPoly compile_mod(const MPoly &f, std::uint64_t p)
{
    CompiledPoly out;
    for (const auto &[e, c] : f.terms()) {
        const auto r = static_cast<std::uint64_t>(mod_floor(c, Int(p)));
        if (r == 0) {
            continue;
        }
        CompiledPoly::Term t{r, {}};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) {
                t.powers.emplace_back(static_cast<std::uint32_t>(i), e[i]);
            }
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

struct CompiledLaws {
    std::vector<CompiledPoly> sum, prod, neg;
};

// Write-once caches shared by all threads. Each key is built exactly once;
// concurrent first users wait on the same once_flag.
class LawCache
{
public:
    static LawCache &instance()
    {
        static LawCache c;
        return c;
    }

    std::shared_ptr<const Laws> laws(const TruncationSet &S)
    {
        return get<Laws>(m_laws, S.to_string(), [&] { return build_laws(S); });
    }
    std::shared_ptr<const FrobeniusLaw> frobenius(const TruncationSet &S, std::uint64_t n)
    {
        return get<FrobeniusLaw>(m_frob, S.to_string() + "|" + std::to_string(n),
                                 [&] { return build_frobenius_law(S, n); });
    }
    std::shared_ptr<const CompiledLaws> compiled(const TruncationSet &S, std::uint64_t p)
    {
        return get<CompiledLaws>(m_compiled, S.to_string() + "|" + std::to_string(p), [&] {
            const auto L = laws(S);
            CompiledLaws c;
            for (const auto &f : L->sum) {
                c.sum.push_back(compile_mod(f, p));
            }
            for (const auto &f : L->prod) {
                c.prod.push_back(compile_mod(f, p));
            }
            for (const auto &f : L->neg) {
                c.neg.push_back(compile_mod(f, p));
            }
            return c;
        });
    }
    std::shared_ptr<const std::vector<CompiledPoly>> compiled_frobenius(const TruncationSet &S, std::uint64_t n,
                                                                         std::uint64_t p)
    {
        return get<std::vector<CompiledPoly>>(
            m_cfrob, S.to_string() + "|" + std::to_string(n) + "|" + std::to_string(p), [&] {
                std::vector<CompiledPoly> c;
                for (const auto &f : frobenius(S, n)->coords) {
                    c.push_back(compile_mod(f, p));
                }
                return c;
            });
    }

private:
    template <class T>
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const T> value;
    };

    template <class T, class Build>
    std::shared_ptr<const T> get(std::map<std::string, std::shared_ptr<Slot<T>>> &table, const std::string &key,
                                 Build build)
    {
        std::shared_ptr<Slot<T>> slot;
        {
            std::lock_guard<std::mutex> lock(m_mutex);
            auto &s = table[key];
            if (!s) {
                s = std::make_shared<Slot<T>>();
            }
            slot = s;
        }
        std::call_once(slot->once, [&] { slot->value = std::make_shared<const T>(build()); });
        return slot->value;
    }

    std::mutex m_mutex;
    std::map<std::string, std::shared_ptr<Slot<Laws>>> m_laws;
    std::map<std::string, std::shared_ptr<Slot<FrobeniusLaw>>> m_frob;
    std::map<std::string, std::shared_ptr<Slot<CompiledLaws>>> m_compiled;
    std::map<std::string, std::shared_ptr<Slot<std::vector<CompiledPoly>>>> m_cfrob;
};

} // namespace mw::witt

#endif
