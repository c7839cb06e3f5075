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

#include <gtest/gtest.h>

#include <vector>

#include <mw/derham/bta.hpp>
#include <mw/derham/forms.hpp>
#include <mw/derham/spec.hpp>
#include <mw/derham/validate.hpp>
#include <mw/ff/field.hpp>

using namespace mw;
using namespace mw::derham;

namespace {

FunField rational(std::uint64_t p, unsigned d = 1)
{
    return FunField::rational(ff::make_field(p, {d}));
}

FunField::Elem el(const FunField &F, const char *s)
{
    return parse_element(F, s);
}

Diff1 form(const FunField &F, const char *s)
{
    return {el(F, s)};
}

// f'(x0) through dual numbers a + b eps over a finite field containing x0.
struct Dual {
    Elem a, b;
};

Dual eval_dual(const Field &E, const FPoly &f, Elem x0)
{
    Dual r{0, 0};
    for (std::size_t i = f.size(); i-- > 0;) {
        // r = r * (x0 + eps) + f_i
        r = Dual{E.add(E.mul(r.a, x0), f[i]), E.add(E.mul(r.b, x0), r.a)};
    }
    return r;
}

} // namespace

TEST(Forms, DlogExamples)
{
    const auto F3 = rational(3);
    EXPECT_EQ(dlog(F3, F3.t()), form(F3, "1/t"));
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto F = rational(p);
        EXPECT_TRUE(is_zero(F, d(F, F.pow(F.t(), static_cast<std::int64_t>(p)))));
    }
    EXPECT_EQ(dlog(F3, el(F3, "t^2*(t+1)")), form(F3, "2/t + 1/(t+1)"));
    EXPECT_THROW(dlog(F3, F3.zero()), DomainError);
}

TEST(Forms, DerivativeMatchesDualNumbers)
{
    Rng rng(1);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const auto k = ff::Field::prime(p);
        const auto E = ff::make_field(p, {4});
        const auto F = FunField::rational(k);
        for (int i = 0; i < 40; ++i) {
            const Rat f = F.base().random(rng, 4);
            const Rat df = d(F, {f}).coeff[0];
            const Elem x0 = E->random(rng);
            const Dual N = eval_dual(*E, f.num, x0), D = eval_dual(*E, f.den, x0);
            if (D.a == 0) {
                continue;
            }
            // (N/D)' = (N'D - N D') / D^2
            const Elem want = E->mul(E->sub(E->mul(N.b, D.a), E->mul(N.a, D.b)), E->inv(E->mul(D.a, D.a)));
            const Elem dn = eval_dual(*E, df.num, x0).a, dd = eval_dual(*E, df.den, x0).a;
            ASSERT_NE(dd, 0u);
            EXPECT_EQ(E->mul(dn, E->inv(dd)), want);
        }
    }
}

TEST(Forms, LeibnizAndDlogMultiplicative)
{
    Rng rng(2);
    std::vector<FunField> fields{rational(3), rational(2, 2), parse_funfield("GF(5)(t)[y]/(y^2 - t)"),
                                 parse_funfield("GF(3)(t)[y]/(y^3 - y - t)"), parse_funfield("GF(3)(t)[u]/(u^3 - t)"),
                                 parse_funfield("GF(2)(t)[u]/(u^2 - t^3 - t)")};
    for (const auto &F : fields) {
        for (int i = 0; i < 20; ++i) {
            const auto f = F.random_unit(rng, 2), g = F.random_unit(rng, 2);
            EXPECT_EQ(d(F, F.mul(f, g)), add(F, scale(F, f, d(F, g)), scale(F, g, d(F, f))));
            EXPECT_EQ(dlog(F, F.mul(f, g)), add(F, dlog(F, f), dlog(F, g)));
            EXPECT_TRUE(is_zero(F, d(F, F.pow(f, static_cast<std::int64_t>(F.characteristic())))));
        }
    }
}

TEST(Cartier, Examples)
{
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto F = rational(p);
        const Diff1 dt{F.one()};
        EXPECT_TRUE(is_zero(F, cartier(F, dt)));
        EXPECT_TRUE(is_exact(F, dt));
        EXPECT_EQ(cartier(F, {F.pow(F.t(), static_cast<std::int64_t>(p - 1))}), dt);
        EXPECT_EQ(cartier(F, dlog(F, F.t())), dlog(F, F.t()));
        EXPECT_FALSE(is_exact(F, dlog(F, F.t())));
    }
    EXPECT_THROW(cartier(parse_funfield("GF(3)(t)[y]/(y^2 - t)"), {{}}), DomainError);
}

TEST(Cartier, Properties)
{
    Rng rng(3);
    for (auto [p, dgr] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 3}}) {
        const auto F = rational(p, dgr);
        for (int i = 0; i < 80; ++i) {
            const auto f = F.random(rng, 4);
            EXPECT_TRUE(is_zero(F, cartier(F, d(F, f))));
            EXPECT_TRUE(is_exact(F, d(F, f)));
            const auto u = F.random_unit(rng, 3);
            EXPECT_EQ(cartier(F, dlog(F, u)), dlog(F, u));
            const Diff1 w1 = random_form(F, rng, 3), w2 = random_form(F, rng, 3);
            EXPECT_EQ(cartier(F, add(F, w1, w2)), add(F, cartier(F, w1), cartier(F, w2)));
            const auto g = F.random(rng, 2);
            EXPECT_EQ(cartier(F, scale(F, F.pow(g, static_cast<std::int64_t>(p)), w1)), scale(F, g, cartier(F, w1)));
        }
    }
}

TEST(Cartier, InverseAndWp)
{
    Rng rng(4);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto F = rational(p);
        const auto P = static_cast<std::int64_t>(p);
        EXPECT_EQ(inverse_cartier(F, dlog(F, F.t())), dlog(F, F.t()));
        EXPECT_TRUE(is_zero(F, wp_form(F, dlog(F, F.t())).normal_form));
        EXPECT_EQ(inverse_cartier(F, {F.t()}), Diff1{F.pow(F.t(), 2 * P - 1)});
        for (int i = 0; i < 40; ++i) {
            const Diff1 w = random_form(F, rng, 3);
            EXPECT_EQ(cartier(F, inverse_cartier(F, w)), w);
            const auto f = F.random(rng, 3);
            // wp(df) and F(df) agree modulo exact forms; F(df) = C^{-1}(df)
            const Diff1 df = d(F, f);
            EXPECT_TRUE(is_exact(F, sub(F, wp_form(F, df).representative, inverse_cartier(F, df))));
            EXPECT_EQ(cartier(F, inverse_cartier(F, df)), df);
            // the normal form differs from w by an exact form and is canonical
            const Diff1 nf = exact_normal_form(F, w);
            EXPECT_TRUE(is_exact(F, sub(F, w, nf)));
            EXPECT_EQ(exact_normal_form(F, add(F, w, df)), nf);
        }
    }
}

TEST(NormTrace, Examples)
{
    const auto L = parse_funfield("GF(3)(t)[y]/(y^2 - t)");
    EXPECT_EQ(norm_ff(L, L.gen()), el(base_field(L), "-t")[0]);
    for (std::uint64_t p : {2u, 3u}) {
        const auto I = parse_funfield(p == 2 ? "GF(2)(t)[u]/(u^2 - t)" : "GF(3)(t)[u]/(u^3 - t)");
        EXPECT_EQ(I.kind(), LayerKind::Inseparable);
        EXPECT_EQ(norm_ff(I, I.gen()), I.base().gen());
    }
    const auto C = parse_funfield("GF(5)(t)[y]/(y^3 + t*y + 1)");
    const Rat c = C.base().from_int(2);
    EXPECT_EQ(norm_ff(C, C.from_base(c)), C.base().pow(c, 3));
    EXPECT_EQ(trace_ff(C, C.one()), C.base().from_int(3));
}

TEST(NormTrace, QuadraticFormulaAndInseparable)
{
    Rng rng(5);
    const auto L = parse_funfield("GF(5)(t)[y]/(y^2 - t^3 - 2)");
    const auto &K = L.base();
    const Rat c = K.add(K.pow(K.gen(), 3), K.from_int(2));
    for (int i = 0; i < 40; ++i) {
        const auto x = L.random(rng, 3);
        // N(a + b y) = a^2 - b^2 c, Tr = 2a
        EXPECT_EQ(norm_ff(L, x), K.sub(K.mul(x[0], x[0]), K.mul(K.mul(x[1], x[1]), c)));
        EXPECT_EQ(trace_ff(L, x), K.mul(K.from_int(2), x[0]));
    }
    for (const char *s : {"GF(2)(t)[u]/(u^2 - t)", "GF(3)(t)[u]/(u^3 - t^2 - t)", "GF(5)(t)[u]/(u^5 - t)"}) {
        const auto I = parse_funfield(s);
        for (int i = 0; i < 20; ++i) {
            const auto x = I.random(rng, 2);
            const auto xp = I.pow(x, static_cast<std::int64_t>(I.characteristic()));
            EXPECT_TRUE(I.in_base(xp));
            EXPECT_EQ(norm_ff(I, x), xp[0]);
            EXPECT_TRUE(I.base().is_zero(trace_ff(I, x)));
        }
    }
}

TEST(TraceForms, SeparableExamples)
{
    const auto L = parse_funfield("GF(3)(t)[y]/(y^2 - t)");
    const auto K = base_field(L);
    EXPECT_EQ(trace_form_sep(L, dlog(L, L.gen())), dlog(K, K.t()));
    EXPECT_TRUE(verify_ntr(L, L.gen()).ok);
    Rng rng(6);
    const Diff1 eta = random_form(K, rng, 3);
    EXPECT_EQ(trace_form_sep(L, restrict_form(L, eta)), scale(K, K.from_int(2), eta));
    const auto b = K.random_unit(rng, 2);
    EXPECT_EQ(verify_ntr(L, L.from_base(b[0])).lhs, scale(K, K.from_int(2), dlog(K, b)));
    EXPECT_THROW(trace_form_insep(L, eta), DomainError);
}

TEST(TraceForms, InseparableExamples)
{
    for (const char *s : {"GF(2)(t)[u]/(u^2 - t)", "GF(3)(t)[u]/(u^3 - t)"}) {
        const auto L = parse_funfield(s);
        const auto K = base_field(L);
        EXPECT_EQ(trace_form_insep(L, dlog(L, L.gen())), dlog(K, K.t()));
        EXPECT_TRUE(verify_ntr(L, L.gen()).ok);
        // Tr(u^i du) for i < p - 1 against d-commutation: (i+1) u^i du = d(u^{i+1})
        const auto p = static_cast<std::int64_t>(L.characteristic());
        for (std::int64_t i = 0; i + 1 < p; ++i) {
            const Diff1 w{L.pow(L.gen(), i)};
            const auto via_d = d(K, {trace_ff(L, L.pow(L.gen(), i + 1))});
            EXPECT_EQ(scale(K, K.from_int(i + 1), trace_form_insep(L, w)), via_d);
        }
    }
}

TEST(TraceForms, FiveValidations)
{
    Rng rng(7);
    const std::vector<const char *> specs{"GF(3)(t)[y]/(y^2 - t)",        "GF(3)(t)[y]/(y^3 - y - t)",
                                          "GF(5)(t)[y]/(y^2 - t^3 - 2)",  "GF(5)(t)[y]/(y^3 + t*y + 1)",
                                          "GF(2)(t)[u]/(u^2 - t)",        "GF(3)(t)[u]/(u^3 - t)",
                                          "GF(3)(t)[u]/(u^3 - t^2 - t)", "GF(4)(t)[u]/(u^2 - x1*t)"};
    for (const char *s : specs) {
        const auto L = parse_funfield(s);
        for (int i = 0; i < 25; ++i) {
            EXPECT_TRUE(check_trace_linearity(L, rng, 2)) << s;
            EXPECT_TRUE(check_trace_of_restriction(L, rng, 2)) << s;
            EXPECT_TRUE(check_trace_d(L, rng, 2)) << s;
            EXPECT_TRUE(check_ntr(L, rng, 2)) << s;
        }
    }
}

TEST(TraceForms, MixedTowerTransitivity)
{
    Rng rng(8);
    std::size_t nonzero = 0;
    for (std::uint64_t p : {2u, 3u}) {
        const auto k = ff::Field::prime(p);
        const auto F = FunField::rational(k, "u");
        for (const FPoly &h : {FPoly{0, 1, 1}, FPoly{1, 1, 0, 1}, FPoly{0, 2 % p, 1}}) {
            if (poly::derivative(*k, h).empty()) {
                continue;
            }
            for (int i = 0; i < 20; ++i) {
                const Rat f = F.base().random(rng, 3);
                const auto [a, b] = mixed_tower_traces(k, h, f);
                EXPECT_EQ(a, b);
                nonzero += !F.base().is_zero(a);
            }
        }
    }
    EXPECT_GT(nonzero, 20u);
}

TEST(Ntr, RandomSeparableAndInseparable)
{
    Rng rng(9);
    for (const char *s : {"GF(3)(t)[y]/(y^2 - t)", "GF(3)(t)[y]/(y^3 - y - t)", "GF(5)(t)[y]/(y^2 - t)",
                          "GF(5)(t)[y]/(y^3 - t)", "GF(2)(t)[u]/(u^2 - t)", "GF(3)(t)[u]/(u^3 - t)"}) {
        const auto L = parse_funfield(s);
        for (int i = 0; i < 30; ++i) {
            const auto r = verify_ntr(L, L.random_unit(rng, 2));
            EXPECT_TRUE(r.ok) << s;
        }
    }
}

TEST(Bta, Examples)
{
    const auto K = parse_funfield("GF(2)(s)[T]/(T^2 + T + s)");
    const auto &k = K.base();
    const FactoredElement beta{k.one(), {KPoly{k.one(), k.one()}}}; // theta + 1
    const auto alpha = K.gen();
    const auto r = bta_rewrite(K, alpha, beta);
    EXPECT_EQ(bta_replay(K, r), scale(K, alpha, dlog(K, evaluate_factored(K, beta))));

    // beta in k: one term
    const FactoredElement unit{k.gen(), {}};
    const auto u = bta_rewrite(K, alpha, unit);
    EXPECT_EQ(u.xi_terms.size(), 1u);
    EXPECT_TRUE(u.x_terms.empty());
    EXPECT_EQ(bta_replay(K, u), scale(K, alpha, dlog(K, K.from_base(k.gen()))));

    const auto z = bta_rewrite(K, K.zero(), beta);
    EXPECT_TRUE(z.xi_terms.empty() && z.x_terms.empty());

    const auto K3 = parse_funfield("GF(3)(s)[T]/(T^3 - T - s)");
    const auto &k3 = K3.base();
    const FactoredElement quad{k3.one(), {KPoly{k3.one(), k3.zero(), k3.one()}}};
    try {
        bta_rewrite(K3, K3.gen(), quad);
        FAIL() << "expected a hypothesis violation";
    } catch (const HypothesisViolation &e) {
        EXPECT_EQ(e.degree, 2u);
    }
}

TEST(Bta, RandomReplay)
{
    Rng rng(10);
    for (const char *s : {"GF(2)(s)[T]/(T^2 + T + s)", "GF(3)(s)[T]/(T^3 - T - s)", "GF(3)(s)[T]/(T^3 - s)",
                          "GF(2)(s)[T]/(T^2 + s*T + s^3 + 1)"}) {
        const auto K = parse_funfield(s);
        const auto &k = K.base();
        for (int i = 0; i < 15; ++i) {
            FactoredElement beta{k.random_unit(rng, 2), {}};
            const auto nf = rng.below(4);
            for (std::uint64_t j = 0; j < nf; ++j) {
                beta.factors.push_back(KPoly{k.random(rng, 2), k.one()});
            }
            const auto alpha = K.random(rng, 2);
            const auto target = scale(K, alpha, dlog(K, evaluate_factored(K, beta)));
            const auto r = bta_rewrite(K, alpha, beta);
            EXPECT_EQ(bta_replay(K, r), target) << s;
        }
    }
}

TEST(Spec, Grammar)
{
    const auto F = parse_funfield("GF(9)(t)");
    EXPECT_EQ(F.kind(), LayerKind::None);
    EXPECT_EQ(F.base().constants().order(), 9u);
    const auto L = parse_funfield("GF(3)(t)[y]/(y^2 - t)");
    EXPECT_EQ(L.kind(), LayerKind::Separable);
    EXPECT_EQ(L.degree(), 2u);
    EXPECT_EQ(parse_funfield(L.spec()).modulus(), L.modulus());
    try {
        parse_funfield("GF(3)(t)[y]/(y^3 - t^3)");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_GT(e.position, 0u);
    }
    EXPECT_THROW(parse_funfield("GF(6)(t)"), ParseError);
    EXPECT_THROW(parse_element(L, "y + z"), ParseError);
    EXPECT_THROW(parse_element(L, "1/(t-t)"), ParseError);
    EXPECT_EQ(parse_element(L, "y^2"), L.t());
    EXPECT_EQ(parse_element(L, "y^-1"), L.inv(L.gen()));
}
