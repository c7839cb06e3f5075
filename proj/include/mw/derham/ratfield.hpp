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

#ifndef MW_DERHAM_RATFIELD_HPP
#define MW_DERHAM_RATFIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/error.hpp>
#include <mw/core/poly.hpp>
#include <mw/core/rng.hpp>
#include <mw/ff/field.hpp>

namespace mw::derham {

using ff::Elem;
using ff::Field;
using ff::FieldRef;
using FPoly = poly::Poly<Field>;

// num / den with gcd 1 and den monic.
struct Rat {
    FPoly num;
    FPoly den;

    bool operator==(const Rat &o) const
    {
        return num == o.num && den == o.den;
    }
};

// F_q(t).
class RatField
{
public:
    using Elem = Rat;

    explicit RatField(FieldRef k, std::string var = "t") : m_k(std::move(k)), m_var(std::move(var)) {}

    const Field &constants() const
    {
        return *m_k;
    }
    const FieldRef &constants_ref() const
    {
        return m_k;
    }
    const std::string &var() const
    {
        return m_var;
    }
    std::uint64_t characteristic() const
    {
        return m_k->characteristic();
    }

    Rat make(FPoly num, FPoly den) const
    {
        poly::trim(*m_k, num);
        poly::trim(*m_k, den);
        if (den.empty()) {
            throw DomainError("rational function with zero denominator");
        }
        if (num.empty()) {
            return zero();
        }
        const FPoly g = poly::gcd(*m_k, num, den);
        if (g.size() > 1) {
            num = poly::quo(*m_k, num, g);
            den = poly::quo(*m_k, den, g);
        }
        const ff::Elem lc = m_k->inv(den.back());
        return {poly::scale(*m_k, num, lc), poly::scale(*m_k, den, lc)};
    }
    Rat from_poly(FPoly num) const
    {
        return make(std::move(num), {m_k->one()});
    }
    Rat constant(ff::Elem c) const
    {
        return from_poly(poly::constant(*m_k, c));
    }
    Rat gen() const
    {
        return from_poly(poly::x_poly(*m_k));
    }

    Rat zero() const
    {
        return {{}, {m_k->one()}};
    }
    Rat one() const
    {
        return constant(m_k->one());
    }
    Rat from_int(std::int64_t n) const
    {
        return constant(m_k->from_int(n));
    }
    bool is_zero(const Rat &a) const
    {
        return a.num.empty();
    }
    bool eq(const Rat &a, const Rat &b) const
    {
        return a == b;
    }
    bool is_constant(const Rat &a) const
    {
        return a.num.size() <= 1 && a.den.size() == 1;
    }

    Rat add(const Rat &a, const Rat &b) const
    {
        if (a.den == b.den) {
            return make(poly::add(*m_k, a.num, b.num), a.den);
        }
        return make(poly::add(*m_k, poly::mul(*m_k, a.num, b.den), poly::mul(*m_k, b.num, a.den)),
                    poly::mul(*m_k, a.den, b.den));
    }
    Rat neg(const Rat &a) const
    {
        return {poly::neg(*m_k, a.num), a.den};
    }
    Rat sub(const Rat &a, const Rat &b) const
    {
        return add(a, neg(b));
    }
    Rat mul(const Rat &a, const Rat &b) const
    {
        return make(poly::mul(*m_k, a.num, b.num), poly::mul(*m_k, a.den, b.den));
    }
    Rat inv(const Rat &a) const
    {
        if (is_zero(a)) {
            throw DomainError("inverse of zero in " + spec());
        }
        return make(a.den, a.num);
    }
    Rat div(const Rat &a, const Rat &b) const
    {
        return mul(a, inv(b));
    }
    Rat pow(Rat a, std::int64_t e) const
    {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        Rat r = one();
        while (e > 0) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // d/dt by the quotient rule.
    Rat derivative(const Rat &a) const
    {
        const FPoly dn = poly::derivative(*m_k, a.num), dd = poly::derivative(*m_k, a.den);
        return make(poly::sub(*m_k, poly::mul(*m_k, dn, a.den), poly::mul(*m_k, a.num, dd)),
                    poly::mul(*m_k, a.den, a.den));
    }

    // f = sum_{i<p} f_i^p t^i.
    std::vector<Rat> pth_components(const Rat &a) const
    {
        const std::uint64_t p = characteristic();
        const FPoly N = poly::mul(*m_k, a.num, poly::pow(*m_k, a.den, static_cast<unsigned>(p - 1)));
        std::vector<Rat> out;
        for (std::uint64_t j = 0; j < p; ++j) {
            FPoly h;
            for (std::uint64_t i = j; i < N.size(); i += p) {
                h.push_back(m_k->pth_root(N[i]));
            }
            out.push_back(make(std::move(h), a.den));
        }
        return out;
    }
    Rat frobenius(const Rat &a) const
    {
        return pow(a, static_cast<std::int64_t>(characteristic()));
    }
    // The p-th root, or DomainError when a is not a p-th power.
    Rat pth_root(const Rat &a) const
    {
        const auto c = pth_components(a);
        for (std::size_t j = 1; j < c.size(); ++j) {
            if (!is_zero(c[j])) {
                throw DomainError(to_string(a) + " is not a p-th power");
            }
        }
        return c[0];
    }

    Rat random(Rng &rng, unsigned max_deg) const
    {
        FPoly num, den;
        const unsigned dn = static_cast<unsigned>(rng.below(max_deg + 1));
        const unsigned dd = static_cast<unsigned>(rng.below(max_deg + 1));
        for (unsigned i = 0; i <= dn; ++i) {
            num.push_back(m_k->random(rng));
        }
        for (unsigned i = 0; i < dd; ++i) {
            den.push_back(m_k->random(rng));
        }
        den.push_back(m_k->one());
        return make(std::move(num), std::move(den));
    }
    Rat random_unit(Rng &rng, unsigned max_deg) const
    {
        for (;;) {
            Rat r = random(rng, max_deg);
            if (!is_zero(r)) {
                return r;
            }
        }
    }

    std::string poly_string(const FPoly &a) const
    {
        if (a.empty()) {
            return "0";
        }
        std::string s;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (m_k->is_zero(a[i])) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            const std::string c = m_k->to_string(a[i]);
            const bool paren = c.find_first_of("+*^") != std::string::npos;
            if (i == 0) {
                s += c;
            } else {
                if (a[i] != m_k->one()) {
                    s += (paren ? "(" + c + ")" : c) + "*";
                }
                s += m_var;
                if (i > 1) {
                    s += "^" + std::to_string(i);
                }
            }
        }
        return s;
    }
    std::string to_string(const Rat &a) const
    {
        const std::string n = poly_string(a.num);
        if (a.den.size() == 1) {
            return n;
        }
        return "(" + n + ")/(" + poly_string(a.den) + ")";
    }
    std::string spec() const
    {
        return m_k->spec() + "(" + m_var + ")";
    }

private:
    FieldRef m_k;
    std::string m_var;
};

} // namespace mw::derham

#endif
