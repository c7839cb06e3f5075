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

#ifndef MW_FF_FIELD_HPP
#define MW_FF_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/arith.hpp>
#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>
#include <mw/core/poly.hpp>
#include <mw/core/rng.hpp>

namespace mw::ff {

// Canonical element code. For a field presented as a tower over F_p the code
// is the base-p integer whose digits are the flattened coordinates, lowest
// layer first. Consequently a prefix subtower K of L occupies exactly the
// codes below |K|, and the inclusion K -> L is the identity on codes.
using Elem = std::uint64_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

struct Layer {
    std::string var;
    std::vector<Elem> poly; // monic, coefficients are codes of the field below
};

class Field
{
    struct Passkey {
    };

public:
    using Elem = ff::Elem;

    // Fields up to this order get exp/log/Zech tables.
    static constexpr std::uint64_t table_cap = std::uint64_t(1) << 16;
    static constexpr std::uint64_t max_order = std::uint64_t(1) << 62;

    Field(Passkey, std::uint64_t p) : m_p(p), m_q(p), m_deg(1), m_rel_deg(1)
    {
        build_tables();
    }

    Field(Passkey, FieldRef base, std::vector<Elem> modulus, std::string var)
        : m_p(base->m_p), m_deg(base->m_deg * static_cast<unsigned>(modulus.size() - 1)),
          m_rel_deg(static_cast<unsigned>(modulus.size() - 1)), m_base(std::move(base)), m_modulus(std::move(modulus)),
          m_var(std::move(var))
    {
        Int q = 1;
        for (unsigned i = 0; i < m_rel_deg; ++i) {
            q *= m_base->m_q;
        }
        if (q > max_order) {
            throw BoundExceeded("field order", static_cast<std::uint64_t>(q > Int(UINT64_MAX) ? Int(UINT64_MAX) : q),
                                max_order);
        }
        m_q = static_cast<std::uint64_t>(q);
        build_tables();
    }

    static FieldRef prime(std::uint64_t p)
    {
        if (!is_prime(p)) {
            throw DomainError("characteristic " + std::to_string(p) + " is not prime");
        }
        if (p >= (std::uint64_t(1) << 31)) {
            throw BoundExceeded("characteristic", p, std::uint64_t(1) << 31);
        }
        return std::make_shared<const Field>(Passkey{}, p);
    }

    // Adjoins a root of a monic irreducible polynomial over base. The
    // irreducibility test is run unless the caller vouches for it.
    static FieldRef extend(const FieldRef &base, std::vector<Elem> modulus, std::string var = {},
                           bool check_irreducible = true);

    std::uint64_t characteristic() const
    {
        return m_p;
    }
    std::uint64_t order() const
    {
        return m_q;
    }
    unsigned degree() const
    {
        return m_deg;
    }
    unsigned rel_degree() const
    {
        return m_rel_deg;
    }
    const FieldRef &base() const
    {
        return m_base;
    }
    bool is_prime_field() const
    {
        return !m_base;
    }
    const std::vector<Elem> &modulus() const
    {
        return m_modulus;
    }
    const std::string &var() const
    {
        return m_var;
    }
    std::size_t layer_count() const
    {
        return m_base ? m_base->layer_count() + 1 : 0;
    }
    std::vector<Layer> layers() const
    {
        std::vector<Layer> out = m_base ? m_base->layers() : std::vector<Layer>{};
        if (m_base) {
            out.push_back({m_var, m_modulus});
        }
        return out;
    }
    // Field of the first k layers.
    FieldRef prefix(const FieldRef &self, std::size_t k) const
    {
        FieldRef cur = self;
        while (cur->layer_count() > k) {
            cur = cur->m_base;
        }
        return cur;
    }

    // Structural identity: same characteristic and layer polynomials.
    bool same_as(const Field &o) const
    {
        if (this == &o) {
            return true;
        }
        if (m_p != o.m_p || m_q != o.m_q || layer_count() != o.layer_count()) {
            return false;
        }
        if (!m_base) {
            return true;
        }
        return m_modulus == o.m_modulus && m_base->same_as(*o.m_base);
    }
    // True when this field's layers are a prefix of L's layers.
    bool is_subtower_of(const Field &L) const
    {
        const Field *cur = &L;
        while (cur->layer_count() > layer_count()) {
            cur = cur->m_base.get();
        }
        return same_as(*cur);
    }
    // Structural key used for caches.
    std::string id() const
    {
        std::ostringstream os;
        os << m_p;
        for (const auto &l : layers()) {
            os << '/';
            for (std::size_t i = 0; i < l.poly.size(); ++i) {
                os << (i ? "," : "") << l.poly[i];
            }
        }
        return os.str();
    }
    std::string spec() const
    {
        return m_deg == 1 ? "GF(" + std::to_string(m_p) + ")"
                          : "GF(" + std::to_string(m_p) + "^" + std::to_string(m_deg) + ")";
    }

    // -- field context interface --
    Elem zero() const
    {
        return 0;
    }
    Elem one() const
    {
        return 1;
    }
    bool is_zero(Elem a) const
    {
        return a == 0;
    }
    bool eq(Elem a, Elem b) const
    {
        return a == b;
    }
    bool contains(Elem a) const
    {
        return a < m_q;
    }
    Elem from_int(std::int64_t n) const
    {
        const auto p = static_cast<std::int64_t>(m_p);
        return static_cast<Elem>(((n % p) + p) % p);
    }
    Elem from_int(const Int &n) const
    {
        return static_cast<Elem>(mod_floor(n, Int(m_p)));
    }

    Elem add(Elem a, Elem b) const
    {
        if (!m_base) {
            const Elem s = a + b;
            return s >= m_p ? s - m_p : s;
        }
        if (m_p == 2) {
            return a ^ b;
        }
        if (a == 0) {
            return b;
        }
        if (b == 0) {
            return a;
        }
        if (!m_exp.empty()) {
            const std::uint64_t n = m_q - 1;
            const std::uint64_t la = m_log[a], lb = m_log[b];
            const std::uint64_t k = lb >= la ? lb - la : lb + n - la;
            const std::int32_t z = m_zech[k];
            if (z < 0) {
                return 0;
            }
            return m_exp[(la + static_cast<std::uint64_t>(z)) % n];
        }
        return add_digits(a, b);
    }
    Elem neg(Elem a) const
    {
        if (a == 0 || m_p == 2) {
            return a;
        }
        if (!m_base) {
            return m_p - a;
        }
        if (!m_exp.empty()) {
            const std::uint64_t n = m_q - 1;
            return m_exp[(m_log[a] + n / 2) % n];
        }
        Elem r = 0, mult = 1;
        while (a) {
            const Elem d = a % m_p;
            r += ((m_p - d) % m_p) * mult;
            a /= m_p;
            mult *= m_p;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const
    {
        return add(a, neg(b));
    }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0) {
            return 0;
        }
        if (!m_base) {
            return (a * b) % m_p;
        }
        if (!m_exp.empty()) {
            const std::uint64_t s = m_log[a] + m_log[b];
            const std::uint64_t n = m_q - 1;
            return m_exp[s >= n ? s - n : s];
        }
        return mul_slow(a, b);
    }
    Elem inv(Elem a) const
    {
        if (a == 0) {
            throw DomainError("inverse of zero in " + spec());
        }
        if (!m_exp.empty()) {
            const std::uint64_t n = m_q - 1;
            return m_exp[(n - m_log[a]) % n];
        }
        return pow(a, Int(m_q - 2));
    }
    Elem div(Elem a, Elem b) const
    {
        return mul(a, inv(b));
    }
    Elem pow(Elem a, const Int &e) const
    {
        if (e < 0) {
            return pow(inv(a), Int(-e));
        }
        if (e == 0) {
            return 1;
        }
        if (a == 0) {
            return 0;
        }
        const std::uint64_t n = m_q - 1;
        const auto r = static_cast<std::uint64_t>(e % n);
        if (!m_exp.empty()) {
            return m_exp[static_cast<std::uint64_t>((Int(m_log[a]) * r) % n)];
        }
        return pow_slow(a, r);
    }
    Elem pow(Elem a, std::int64_t e) const
    {
        return pow(a, Int(e));
    }
    Elem frobenius(Elem a) const
    {
        return pow(a, Int(m_p));
    }
    // p-th root (the inverse of Frobenius on a finite field).
    Elem pth_root(Elem a) const
    {
        return pow(a, Int(m_q / m_p));
    }

    // Code of the top layer generator.
    Elem generator() const
    {
        return m_base ? m_base->m_q : 1;
    }
    Elem primitive_element() const
    {
        std::call_once(*m_prim_once, [this] {
            if (m_prim == 0) {
                m_prim = find_primitive();
            }
        });
        return m_prim;
    }
    bool has_tables() const
    {
        return !m_exp.empty();
    }
    // Discrete logarithm to the base primitive_element().
    std::uint64_t log(Elem a) const
    {
        if (a == 0) {
            throw DomainError("log of zero");
        }
        if (!m_exp.empty()) {
            return m_log[a];
        }
        throw BoundExceeded("discrete log table", m_q, table_cap);
    }

    // Coordinates over base(), rel_degree() of them.
    std::vector<Elem> coords(Elem a) const
    {
        if (!m_base) {
            return {a};
        }
        std::vector<Elem> out(m_rel_deg);
        for (auto &c : out) {
            c = a % m_base->m_q;
            a /= m_base->m_q;
        }
        return out;
    }
    Elem from_coords(std::span<const Elem> c) const
    {
        if (!m_base) {
            return c.empty() ? 0 : c[0] % m_p;
        }
        Elem r = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            r = r * m_base->m_q + c[i];
        }
        return r;
    }

    Elem random(Rng &rng) const
    {
        return rng.below(m_q);
    }
    Elem random_unit(Rng &rng) const
    {
        return 1 + rng.below(m_q - 1);
    }

    std::string to_string(Elem a) const
    {
        if (!m_base) {
            return std::to_string(a);
        }
        const auto c = coords(a);
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += "+";
            }
            std::string coef = m_base->to_string(c[i]);
            const bool compound = coef.find('+') != std::string::npos;
            if (i == 0) {
                out += coef;
                continue;
            }
            if (c[i] != 1) {
                out += compound ? "(" + coef + ")*" : coef + "*";
            }
            out += m_var;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    Elem add_digits(Elem a, Elem b) const
    {
        Elem r = 0, mult = 1;
        while (a || b) {
            r += ((a % m_p + b % m_p) % m_p) * mult;
            a /= m_p;
            b /= m_p;
            mult *= m_p;
        }
        return r;
    }
    Elem mul_slow(Elem a, Elem b) const
    {
        if (!m_base) {
            return (a * b) % m_p;
        }
        const Field &B = *m_base;
        const auto ca = coords(a), cb = coords(b);
        const unsigned n = m_rel_deg;
        std::vector<Elem> prod(2 * n - 1, 0);
        for (unsigned i = 0; i < n; ++i) {
            if (ca[i] == 0) {
                continue;
            }
            for (unsigned j = 0; j < n; ++j) {
                prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
            }
        }
        for (std::size_t i = prod.size(); i-- > n;) {
            const Elem c = prod[i];
            if (c == 0) {
                continue;
            }
            for (unsigned j = 0; j < n; ++j) {
                prod[i - n + j] = B.sub(prod[i - n + j], B.mul(c, m_modulus[j]));
            }
            prod[i] = 0;
        }
        return from_coords(std::span<const Elem>(prod.data(), n));
    }
    Elem pow_slow(Elem a, std::uint64_t e) const
    {
        Elem r = 1;
        while (e) {
            if (e & 1u) {
                r = mul_slow(r, a);
            }
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem find_primitive() const
    {
        const std::uint64_t n = m_q - 1;
        if (n == 1) {
            return 1;
        }
        const auto primes = prime_divisors(n);
        for (Elem g = 2; g < m_q; ++g) {
            bool ok = true;
            for (auto r : primes) {
                if (pow_slow(g, n / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return g;
            }
        }
        return 1; // unreachable for a field
    }
    void build_tables()
    {
        m_prim_once = std::make_unique<std::once_flag>();
        if (m_q > table_cap) {
            return;
        }
        m_prim = find_primitive();
        const std::uint64_t n = m_q - 1;
        m_exp.assign(n, 0);
        m_log.assign(m_q, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            m_exp[i] = static_cast<std::uint32_t>(x);
            m_log[x] = static_cast<std::uint32_t>(i);
            x = mul_slow(x, m_prim);
        }
        m_zech.assign(n, -1);
        for (std::uint64_t k = 0; k < n; ++k) {
            const Elem s = m_p == 2 && m_base ? (m_exp[k] ^ 1u) : (m_base ? add_digits(m_exp[k], 1) : (m_exp[k] + 1) % m_p);
            m_zech[k] = s == 0 ? -1 : static_cast<std::int32_t>(m_log[s]);
        }
    }

    std::uint64_t m_p;
    std::uint64_t m_q = 0;
    unsigned m_deg;
    unsigned m_rel_deg;
    FieldRef m_base;
    std::vector<Elem> m_modulus;
    std::string m_var;
    std::vector<std::uint32_t> m_exp;
    std::vector<std::uint32_t> m_log;
    std::vector<std::int32_t> m_zech;
    mutable Elem m_prim = 0;
    std::unique_ptr<std::once_flag> m_prim_once;
};

// Rabin's test for a monic polynomial over a finite field.
inline bool is_irreducible(const Field &f, const poly::Poly<Field> &g)
{
    const int n = poly::degree<Field>(g);
    if (n < 1) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    const auto x = poly::x_poly(f);
    std::vector<poly::Poly<Field>> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = poly::rem(f, x, g);
    for (int i = 1; i <= n; ++i) {
        frob[static_cast<std::size_t>(i)] = poly::powmod(f, frob[static_cast<std::size_t>(i - 1)], f.order(), g);
    }
    if (!poly::equal(f, frob[static_cast<std::size_t>(n)], frob[0])) {
        return false;
    }
    for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
        const auto h = poly::sub(f, frob[static_cast<std::size_t>(n) / r], x);
        if (!poly::is_one(f, poly::gcd(f, h, g))) {
            return false;
        }
    }
    return true;
}

inline FieldRef Field::extend(const FieldRef &base, std::vector<Elem> modulus, std::string var, bool check_irreducible)
{
    if (modulus.size() < 3) {
        throw DomainError("extension layer must have degree at least 2");
    }
    if (modulus.back() != 1) {
        throw DomainError("layer polynomial is not monic");
    }
    for (auto c : modulus) {
        if (!base->contains(c)) {
            throw DomainError("layer coefficient outside base field");
        }
    }
    if (check_irreducible && !is_irreducible(*base, modulus)) {
        throw DomainError("layer polynomial is reducible over " + base->spec());
    }
    if (var.empty()) {
        var = "x" + std::to_string(base->layer_count() + 1);
    }
    return std::make_shared<const Field>(Passkey{}, base, std::move(modulus), std::move(var));
}

// Appends a layer of the given relative degree, found by seeded random search.
inline FieldRef extend_by_degree(const FieldRef &base, unsigned degree, std::uint64_t seed, std::string var = {})
{
    if (degree == 0) {
        throw DomainError("layer degree must be positive");
    }
    if (degree == 1) {
        return base;
    }
    Rng rng(seed * 1000003u + degree * 7919u + base->order());
    for (;;) {
        std::vector<Elem> g(degree + 1);
        for (unsigned i = 0; i < degree; ++i) {
            g[i] = base->random(rng);
        }
        g[degree] = 1;
        if (g[0] == 0) {
            continue;
        }
        if (is_irreducible(*base, g)) {
            return Field::extend(base, std::move(g), std::move(var), false);
        }
    }
}

// A tower over F_p with the given layer degrees; degree-1 layers are skipped.
inline FieldRef make_field(std::uint64_t p, const std::vector<unsigned> &layer_degrees, std::uint64_t seed = 0)
{
    auto f = Field::prime(p);
    for (auto d : layer_degrees) {
        if (d == 0) {
            throw DomainError("layer degree must be positive");
        }
    }
    for (auto d : layer_degrees) {
        f = extend_by_degree(f, d, seed);
    }
    return f;
}

// Rebuilds a tower from its layers, re-checking every layer.
inline FieldRef field_from_layers(std::uint64_t p, const std::vector<Layer> &layers)
{
    auto f = Field::prime(p);
    for (const auto &l : layers) {
        f = Field::extend(f, l.poly, l.var, true);
    }
    return f;
}

inline std::uint64_t relative_degree(const Field &L, const Field &K)
{
    if (!K.is_subtower_of(L)) {
        throw DomainError(K.spec() + " is not a subtower of " + L.spec());
    }
    return L.degree() / K.degree();
}

} // namespace mw::ff

#endif
