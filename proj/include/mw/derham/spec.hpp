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

#ifndef MW_DERHAM_SPEC_HPP
#define MW_DERHAM_SPEC_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <mw/core/cursor.hpp>
#include <mw/derham/funfield.hpp>
#include <mw/ff/spec.hpp>

namespace mw::derham {

namespace detail {

// Infix expressions with + - * / ^, integer literals and named variables.
template <class Ctx>
class ExprParser
{
public:
    using Elem = typename Ctx::Elem;
    using Lookup = std::function<std::optional<Elem>(const std::string &)>;

    ExprParser(const Ctx &ctx, Cursor &c, Lookup vars) : m_ctx(ctx), m_c(c), m_vars(std::move(vars)) {}

    Elem expr()
    {
        Elem acc = m_c.accept('-') ? m_ctx.neg(term()) : term();
        for (;;) {
            if (m_c.accept('+')) {
                acc = m_ctx.add(acc, term());
            } else if (m_c.accept('-')) {
                acc = m_ctx.sub(acc, term());
            } else {
                return acc;
            }
        }
    }

private:
    Elem term()
    {
        Elem acc = power();
        for (;;) {
            if (m_c.accept('*')) {
                acc = m_ctx.mul(acc, power());
            } else if (m_c.peek() == '/') {
                m_c.accept('/');
                const std::size_t at = m_c.pos();
                const Elem den = power();
                try {
                    acc = m_ctx.div(acc, den);
                } catch (const DomainError &e) {
                    throw ParseError(e.what(), at);
                }
            } else {
                return acc;
            }
        }
    }
    Elem power()
    {
        Elem base = primary();
        if (m_c.accept('^')) {
            const bool negative = m_c.accept('-');
            const std::size_t at = m_c.pos();
            const auto e = m_c.number();
            if (e > 100000) {
                throw ParseError("exponent too large", at);
            }
            const auto s = static_cast<std::int64_t>(e);
            try {
                return m_ctx.pow(base, negative ? -s : s);
            } catch (const DomainError &err) {
                throw ParseError(err.what(), at);
            }
        }
        return base;
    }
    Elem primary()
    {
        if (m_c.accept('(')) {
            Elem e = expr();
            m_c.expect(')');
            return e;
        }
        if (m_c.accept('-')) {
            return m_ctx.neg(primary());
        }
        const char ch = m_c.peek();
        if (ch >= '0' && ch <= '9') {
            const auto n = m_c.number();
            return m_ctx.from_int(static_cast<std::int64_t>(n % (1ULL << 62)));
        }
        const std::size_t at = m_c.pos();
        const std::string name = m_c.identifier();
        if (auto v = m_vars(name)) {
            return *v;
        }
        throw ParseError("unknown variable '" + name + "'", at);
    }

    const Ctx &m_ctx;
    Cursor &m_c;
    Lookup m_vars;
};

// K[y] with division by constants only.
struct PolyCtx {
    using Elem = KPoly;
    const RatField &K;

    Elem add(const Elem &a, const Elem &b) const
    {
        return poly::add(K, a, b);
    }
    Elem sub(const Elem &a, const Elem &b) const
    {
        return poly::sub(K, a, b);
    }
    Elem neg(const Elem &a) const
    {
        return poly::neg(K, a);
    }
    Elem mul(const Elem &a, const Elem &b) const
    {
        return poly::mul(K, a, b);
    }
    Elem from_int(std::int64_t n) const
    {
        return poly::constant(K, K.from_int(n));
    }
    Elem div(const Elem &a, const Elem &b) const
    {
        if (b.size() != 1) {
            throw DomainError("division by a non-constant polynomial");
        }
        return poly::scale(K, a, K.inv(b[0]));
    }
    Elem pow(const Elem &a, std::int64_t e) const
    {
        if (e < 0) {
            throw DomainError("negative power of a polynomial");
        }
        return poly::pow(K, a, static_cast<unsigned>(e));
    }
};

inline std::optional<Rat> constant_generator(const RatField &K, const std::string &name)
{
    const auto &k = K.constants();
    if (!k.is_prime_field() && name == k.var()) {
        return K.constant(k.generator());
    }
    return std::nullopt;
}

} // namespace detail

// GF(q)(t) or GF(q)(t)[y]/(g).
inline FunField parse_funfield(std::string_view s, std::uint64_t seed = 0)
{
    Cursor c(s);
    const auto [p, d] = ff::detail::parse_gf(c);
    auto k = ff::make_field(p, {d}, seed);
    c.expect('(');
    const std::string t = c.identifier();
    c.expect(')');
    FunField base = FunField::rational(k, t);
    if (c.done()) {
        return base;
    }
    c.expect('[');
    const std::size_t yat = c.pos();
    const std::string y = c.identifier();
    if (y == t) {
        throw ParseError("layer variable must differ from " + t, yat);
    }
    c.expect(']');
    c.expect('/');
    c.expect('(');
    const std::size_t gat = c.pos();
    const auto &K = base.base();
    detail::PolyCtx ctx{K};
    detail::ExprParser<detail::PolyCtx> ep(ctx, c, [&](const std::string &name) -> std::optional<KPoly> {
        if (name == t) {
            return KPoly{K.gen()};
        }
        if (name == y) {
            return KPoly{K.zero(), K.one()};
        }
        if (auto g = detail::constant_generator(K, name)) {
            return KPoly{*g};
        }
        return std::nullopt;
    });
    KPoly g = ep.expr();
    c.expect(')');
    c.expect_end();
    try {
        return FunField::extension(K, std::move(g), y);
    } catch (const DomainError &e) {
        throw ParseError(e.what(), gat);
    }
}

inline FunField::Elem parse_element(const FunField &F, std::string_view s)
{
    Cursor c(s);
    const auto &K = F.base();
    detail::ExprParser<FunField> ep(F, c, [&](const std::string &name) -> std::optional<FunField::Elem> {
        if (name == K.var()) {
            return F.t();
        }
        if (F.kind() != LayerKind::None && name == F.var()) {
            return F.gen();
        }
        if (auto g = detail::constant_generator(K, name)) {
            return F.from_base(*g);
        }
        return std::nullopt;
    });
    auto e = ep.expr();
    c.expect_end();
    return e;
}

} // namespace mw::derham

#endif
