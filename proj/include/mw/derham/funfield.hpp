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

#ifndef MW_DERHAM_FUNFIELD_HPP
#define MW_DERHAM_FUNFIELD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/linalg.hpp>
#include <mw/derham/ratfield.hpp>

namespace mw::derham {

enum class LayerKind { None, Separable, Inseparable };

using KPoly = poly::Poly<RatField>;

// F_q(t), or F_q(t)[y]/(g) for a monic g that is separable or y^p - a.
// Elements are coefficient vectors over F_q(t) in the basis 1, y, ...
class FunField
{
public:
    using Elem = std::vector<Rat>;

    static FunField rational(FieldRef k, std::string var = "t")
    {
        return FunField(RatField(std::move(k), std::move(var)));
    }

    // The extension by a monic polynomial g of degree >= 2 over the base.
    static FunField extension(const RatField &K, KPoly g, std::string var = "y")
    {
        poly::trim(K, g);
        if (g.size() < 3 || !K.eq(g.back(), K.one())) {
            throw DomainError("defining polynomial must be monic of degree >= 2");
        }
        FunField F(K);
        F.m_var = std::move(var);
        const auto p = K.characteristic();
        bool pure = g.size() == p + 1;
        for (std::size_t i = 1; pure && i + 1 < g.size(); ++i) {
            pure = K.is_zero(g[i]);
        }
        if (pure) {
            const Rat a = K.neg(g[0]);
            bool is_power = true;
            try {
                (void)K.pth_root(a);
            } catch (const DomainError &) {
                is_power = false;
            }
            if (is_power) {
                throw DomainError("y^p - a with a a p-th power is reducible");
            }
            F.m_kind = LayerKind::Inseparable;
            F.m_a = a;
        } else {
            const KPoly dg = poly::derivative(K, g);
            if (dg.empty() || poly::gcd(K, g, dg).size() > 1) {
                throw DomainError("defining polynomial is neither separable nor y^p - a");
            }
            F.m_kind = LayerKind::Separable;
        }
        F.m_g = std::move(g);
        return F;
    }

    const RatField &base() const
    {
        return m_K;
    }
    LayerKind kind() const
    {
        return m_kind;
    }
    const KPoly &modulus() const
    {
        return m_g;
    }
    // a with y^p = a, for the inseparable layer.
    const Rat &radicand() const
    {
        return m_a;
    }
    std::size_t degree() const
    {
        return m_kind == LayerKind::None ? 1 : m_g.size() - 1;
    }
    const std::string &var() const
    {
        return m_var;
    }
    // The separating element whose differential spans the 1-forms.
    const std::string &basis_name() const
    {
        return m_kind == LayerKind::Inseparable ? m_var : m_K.var();
    }
    std::uint64_t characteristic() const
    {
        return m_K.characteristic();
    }

    Elem zero() const
    {
        return Elem(degree(), m_K.zero());
    }
    Elem one() const
    {
        return from_base(m_K.one());
    }
    Elem from_int(std::int64_t n) const
    {
        return from_base(m_K.from_int(n));
    }
    Elem from_base(const Rat &c) const
    {
        Elem e = zero();
        e[0] = c;
        return e;
    }
    // t, the generator of the base.
    Elem t() const
    {
        return from_base(m_K.gen());
    }
    // y, the layer generator.
    Elem gen() const
    {
        if (m_kind == LayerKind::None) {
            return t();
        }
        Elem e = zero();
        e[1] = m_K.one();
        return e;
    }
    bool in_base(const Elem &a) const
    {
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (!m_K.is_zero(a[i])) {
                return false;
            }
        }
        return true;
    }

    bool is_zero(const Elem &a) const
    {
        for (const auto &c : a) {
            if (!m_K.is_zero(c)) {
                return false;
            }
        }
        return true;
    }
    bool eq(const Elem &a, const Elem &b) const
    {
        return a == b;
    }
    Elem add(const Elem &a, const Elem &b) const
    {
        Elem r(a.size(), m_K.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = m_K.add(a[i], b[i]);
        }
        return r;
    }
    Elem neg(const Elem &a) const
    {
        Elem r;
        for (const auto &c : a) {
            r.push_back(m_K.neg(c));
        }
        return r;
    }
    Elem sub(const Elem &a, const Elem &b) const
    {
        return add(a, neg(b));
    }
    Elem scale(const Rat &c, const Elem &a) const
    {
        Elem r;
        for (const auto &x : a) {
            r.push_back(m_K.mul(c, x));
        }
        return r;
    }
    Elem mul(const Elem &a, const Elem &b) const
    {
        if (m_kind == LayerKind::None) {
            return {m_K.mul(a[0], b[0])};
        }
        return from_poly(poly::rem(m_K, poly::mul(m_K, to_poly(a), to_poly(b)), m_g));
    }
    Elem inv(const Elem &a) const
    {
        if (is_zero(a)) {
            throw DomainError("inverse of zero in " + spec());
        }
        if (m_kind == LayerKind::None) {
            return {m_K.inv(a[0])};
        }
        auto [g, s, t] = poly::xgcd(m_K, to_poly(a), m_g);
        (void)t;
        if (g.size() != 1) {
            throw DomainError("defining polynomial of " + spec() + " is reducible");
        }
        return from_poly(poly::scale(m_K, s, m_K.inv(g[0])));
    }
    Elem div(const Elem &a, const Elem &b) const
    {
        return mul(a, inv(b));
    }
    Elem pow(Elem a, std::int64_t e) const
    {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        Elem r = one();
        while (e > 0) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    KPoly to_poly(const Elem &a) const
    {
        KPoly r(a.begin(), a.end());
        poly::trim(m_K, r);
        return r;
    }
    Elem from_poly(KPoly a) const
    {
        if (m_kind == LayerKind::None) {
            if (a.size() > 1) {
                throw DomainError("polynomial in the layer variable over a rational field");
            }
            return {a.empty() ? m_K.zero() : a[0]};
        }
        a = poly::rem(m_K, a, m_g);
        Elem e = zero();
        for (std::size_t i = 0; i < a.size(); ++i) {
            e[i] = a[i];
        }
        return e;
    }

    // Matrix of multiplication by a in the power basis; column j is a * y^j.
    linalg::Matrix<RatField> mult_matrix(const Elem &a) const
    {
        const std::size_t m = degree();
        linalg::Matrix<RatField> M(m, std::vector<Rat>(m, m_K.zero()));
        Elem col = a;
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                M[i][j] = col[i];
            }
            if (j + 1 < m) {
                col = mul(col, gen());
            }
        }
        return M;
    }

    // d a / d s for the separating element s (t, or y when dt = 0).
    Elem derivative(const Elem &a) const
    {
        switch (m_kind) {
        case LayerKind::None:
            return {m_K.derivative(a[0])};
        case LayerKind::Inseparable: {
            Elem r = zero();
            for (std::size_t i = 1; i < a.size(); ++i) {
                r[i - 1] = m_K.mul(m_K.from_int(static_cast<std::int64_t>(i)), a[i]);
            }
            return r;
        }
        case LayerKind::Separable: {
            // dy/dt = -g_t(y) / g_y(y)
            KPoly gt;
            for (const auto &c : m_g) {
                gt.push_back(m_K.derivative(c));
            }
            poly::trim(m_K, gt);
            const Elem dy = neg(div(from_poly(gt), from_poly(poly::derivative(m_K, m_g))));
            Elem coef_dt = zero(), coef_y = zero();
            for (std::size_t i = 0; i < a.size(); ++i) {
                coef_dt[i] = m_K.derivative(a[i]);
                if (i > 0) {
                    coef_y[i - 1] = m_K.mul(m_K.from_int(static_cast<std::int64_t>(i)), a[i]);
                }
            }
            return add(coef_dt, mul(coef_y, dy));
        }
        }
        return zero();
    }

    // Evaluates a rational function of F_q(x) at an element of this field.
    Elem evaluate(const Rat &f, const Elem &x) const
    {
        auto ev = [&](const FPoly &c) {
            Elem r = zero();
            for (std::size_t i = c.size(); i-- > 0;) {
                r = add(mul(r, x), from_base(m_K.constant(c[i])));
            }
            return r;
        };
        return div(ev(f.num), ev(f.den));
    }

    Elem random(Rng &rng, unsigned max_deg) const
    {
        Elem e = zero();
        for (auto &c : e) {
            c = m_K.random(rng, max_deg);
        }
        return e;
    }
    Elem random_unit(Rng &rng, unsigned max_deg) const
    {
        for (;;) {
            Elem e = random(rng, max_deg);
            if (!is_zero(e)) {
                return e;
            }
        }
    }

    std::string to_string(const Elem &a) const
    {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (m_K.is_zero(a[i])) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            const std::string c = m_K.to_string(a[i]);
            if (i == 0) {
                s += c;
                continue;
            }
            if (!m_K.eq(a[i], m_K.one())) {
                s += "(" + c + ")*";
            }
            s += m_var;
            if (i > 1) {
                s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
    std::string spec() const
    {
        if (m_kind == LayerKind::None) {
            return m_K.spec();
        }
        std::string g;
        for (std::size_t i = m_g.size(); i-- > 0;) {
            if (m_K.is_zero(m_g[i])) {
                continue;
            }
            if (!g.empty()) {
                g += " + ";
            }
            const std::string c = m_K.to_string(m_g[i]);
            const std::string mono = i == 0 ? "" : (i == 1 ? m_var : m_var + "^" + std::to_string(i));
            if (i == 0) {
                g += "(" + c + ")";
            } else if (m_K.eq(m_g[i], m_K.one())) {
                g += mono;
            } else {
                g += "(" + c + ")*" + mono;
            }
        }
        return m_K.spec() + "[" + m_var + "]/(" + g + ")";
    }

private:
    explicit FunField(RatField K) : m_K(std::move(K)) {}

    RatField m_K;
    LayerKind m_kind = LayerKind::None;
    KPoly m_g;
    Rat m_a;
    std::string m_var = "t";
};

} // namespace mw::derham

#endif
