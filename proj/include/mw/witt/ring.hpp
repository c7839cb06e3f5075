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

#ifndef MW_WITT_RING_HPP
#define MW_WITT_RING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>
#include <mw/core/rng.hpp>
#include <mw/ff/field.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/laws.hpp>

namespace mw::witt {

// The integers as a coefficient context.
struct IntRing {
    using Elem = Int;
    Elem zero() const
    {
        return 0;
    }
    Elem one() const
    {
        return 1;
    }
    Elem add(const Elem &a, const Elem &b) const
    {
        return a + b;
    }
    Elem sub(const Elem &a, const Elem &b) const
    {
        return a - b;
    }
    Elem neg(const Elem &a) const
    {
        return -a;
    }
    Elem mul(const Elem &a, const Elem &b) const
    {
        return a * b;
    }
    Elem pow(const Elem &a, const Int &e) const
    {
        return boost::multiprecision::pow(a, static_cast<unsigned>(e));
    }
    bool eq(const Elem &a, const Elem &b) const
    {
        return a == b;
    }
    bool is_zero(const Elem &a) const
    {
        return a == 0;
    }
    Elem from_int(const Int &n) const
    {
        return n;
    }
    std::string name() const
    {
        return "Z";
    }
};

using IntRingRef = std::shared_ptr<const IntRing>;

inline IntRingRef integers()
{
    static const auto z = std::make_shared<const IntRing>();
    return z;
}

template <class C>
constexpr bool is_field_coeff = std::is_same_v<C, ff::Field>;

// Evaluation of compiled mod-p polynomials over a finite field.
inline ff::Elem eval_compiled(const ff::Field &f, const CompiledPoly &g, const std::vector<ff::Elem> &x)
{
    ff::Elem acc = 0;
    for (const auto &t : g.terms) {
        ff::Elem m = t.coeff;
        for (const auto &[v, e] : t.powers) {
            const ff::Elem xv = x[v];
            if (xv == 0) {
                m = 0;
                break;
            }
            m = f.mul(m, e == 1 ? xv : f.pow(xv, Int(e)));
        }
        if (m) {
            acc = f.add(acc, m);
        }
    }
    return acc;
}

// W_S(A) for a coefficient context A (IntRing or ff::Field). Vectors are
// coordinate arrays indexed by the sorted elements of S.
template <class C>
class WittRing
{
public:
    using Coeff = C;
    using Scalar = typename C::Elem;
    using Vector = std::vector<Scalar>;

    WittRing(TruncationSet S, std::shared_ptr<const C> coeff) : m_S(std::move(S)), m_c(std::move(coeff))
    {
        if constexpr (is_field_coeff<C>) {
            m_compiled = LawCache::instance().compiled(m_S, m_c->characteristic());
        } else {
            m_laws = LawCache::instance().laws(m_S);
        }
    }

    const TruncationSet &tset() const
    {
        return m_S;
    }
    const C &coeff() const
    {
        return *m_c;
    }
    const std::shared_ptr<const C> &coeff_ref() const
    {
        return m_c;
    }
    std::size_t size() const
    {
        return m_S.size();
    }

    Vector zero() const
    {
        return Vector(size(), m_c->zero());
    }
    Vector teichmuller(const Scalar &b) const
    {
        Vector v = zero();
        v[0] = b;
        return v;
    }
    Vector one() const
    {
        return teichmuller(m_c->one());
    }
    bool eq(const Vector &a, const Vector &b) const
    {
        check(a);
        check(b);
        for (std::size_t i = 0; i < size(); ++i) {
            if (!m_c->eq(a[i], b[i])) {
                return false;
            }
        }
        return true;
    }
    bool is_zero(const Vector &a) const
    {
        return eq(a, zero());
    }

    Vector add(const Vector &a, const Vector &b) const
    {
        check(a);
        check(b);
        if constexpr (is_field_coeff<C>) {
            return eval2(m_compiled->sum, a, b);
        } else {
            return eval2(m_laws->sum, a, b);
        }
    }
    Vector mul(const Vector &a, const Vector &b) const
    {
        check(a);
        check(b);
        if constexpr (is_field_coeff<C>) {
            return eval2(m_compiled->prod, a, b);
        } else {
            return eval2(m_laws->prod, a, b);
        }
    }
    Vector neg(const Vector &a) const
    {
        check(a);
        Vector out(size());
        for (std::size_t i = 0; i < size(); ++i) {
            if constexpr (is_field_coeff<C>) {
                out[i] = eval_compiled(*m_c, m_compiled->neg[i], a);
            } else {
                out[i] = m_laws->neg[i].eval(*m_c, a);
            }
        }
        return out;
    }
    Vector sub(const Vector &a, const Vector &b) const
    {
        return add(a, neg(b));
    }
    // n * a by double-and-add.
    Vector scale(const Int &n, Vector a) const
    {
        check(a);
        if (n < 0) {
            return scale(-n, neg(a));
        }
        Vector acc = zero();
        Int k = n;
        while (k > 0) {
            if (bit_test(k, 0)) {
                acc = add(acc, a);
            }
            k >>= 1;
            if (k > 0) {
                a = add(a, a);
            }
        }
        return acc;
    }
    Vector from_int(const Int &n) const
    {
        return scale(n, one());
    }

    // Enumeration of a finite coefficient ring's Witt vectors.
    std::uint64_t cardinality() const
    {
        static_assert(is_field_coeff<C>, "enumeration needs a finite coefficient field");
        Int n = 1;
        for (std::size_t i = 0; i < size(); ++i) {
            n *= m_c->order();
        }
        if (n > Int(UINT64_MAX / 2)) {
            throw BoundExceeded("Witt ring cardinality", UINT64_MAX, UINT64_MAX / 2);
        }
        return static_cast<std::uint64_t>(n);
    }
    Vector at(std::uint64_t idx) const
    {
        static_assert(is_field_coeff<C>, "enumeration needs a finite coefficient field");
        Vector v(size());
        for (auto &x : v) {
            x = idx % m_c->order();
            idx /= m_c->order();
        }
        return v;
    }
    std::uint64_t index(const Vector &v) const
    {
        static_assert(is_field_coeff<C>, "enumeration needs a finite coefficient field");
        check(v);
        std::uint64_t idx = 0;
        for (std::size_t i = size(); i-- > 0;) {
            idx = idx * m_c->order() + v[i];
        }
        return idx;
    }
    Vector random(Rng &rng) const
    {
        static_assert(is_field_coeff<C>, "random sampling needs a finite coefficient field");
        Vector v(size());
        for (auto &x : v) {
            x = m_c->random(rng);
        }
        return v;
    }

    void check(const Vector &a) const
    {
        if (a.size() != size()) {
            throw DomainError("Witt vector length " + std::to_string(a.size()) + " does not match truncation set {" +
                              m_S.to_string() + "}");
        }
        if constexpr (is_field_coeff<C>) {
            for (auto x : a) {
                if (!m_c->contains(x)) {
                    throw DomainError("Witt coordinate outside coefficient field");
                }
            }
        }
    }

private:
    template <class Polys>
    Vector eval2(const Polys &laws, const Vector &a, const Vector &b) const
    {
        Vector ab(a);
        ab.insert(ab.end(), b.begin(), b.end());
        Vector out(size());
        for (std::size_t i = 0; i < size(); ++i) {
            if constexpr (is_field_coeff<C>) {
                out[i] = eval_compiled(*m_c, laws[i], ab);
            } else {
                out[i] = laws[i].eval(*m_c, ab);
            }
        }
        return out;
    }

    TruncationSet m_S;
    std::shared_ptr<const C> m_c;
    std::shared_ptr<const Laws> m_laws;
    std::shared_ptr<const CompiledLaws> m_compiled;
};

using IntWitt = WittRing<IntRing>;
using FieldWitt = WittRing<ff::Field>;

} // namespace mw::witt

#endif
