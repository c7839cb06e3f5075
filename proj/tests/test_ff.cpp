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

#include <algorithm>
#include <set>
#include <vector>

#include <mw/ff/embed.hpp>
#include <mw/ff/factor.hpp>
#include <mw/ff/field.hpp>
#include <mw/ff/maps.hpp>
#include <mw/ff/spec.hpp>

using namespace mw;
using namespace mw::ff;

namespace {

// Schoolbook arithmetic in F_p[x]/(g) on plain digit vectors.
struct NaiveExt {
    std::uint64_t p;
    std::vector<std::uint64_t> g; // monic

    std::vector<std::uint64_t> digits(std::uint64_t code) const
    {
        std::vector<std::uint64_t> d(g.size() - 1);
        for (auto &x : d) {
            x = code % p;
            code /= p;
        }
        return d;
    }
    std::uint64_t code(const std::vector<std::uint64_t> &d) const
    {
        std::uint64_t c = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            c = c * p + d[i];
        }
        return c;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        const auto x = digits(a), y = digits(b);
        const std::size_t n = x.size();
        std::vector<std::uint64_t> prod(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for (std::size_t i = 2 * n; i-- > n;) {
            const auto c = prod[i];
            for (std::size_t j = 0; j <= n; ++j) {
                prod[i - n + j] = (prod[i - n + j] + (p - c) * g[j]) % p;
            }
        }
        prod.resize(n);
        return code(prod);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        auto x = digits(a);
        const auto y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = (x[i] + y[i]) % p;
        }
        return code(x);
    }
};

FPoly P(std::initializer_list<Elem> c)
{
    return FPoly(c);
}

} // namespace

TEST(FieldConstruction, QuadraticOverF2IsUnique)
{
    auto f = make_field(2, {2}, 0);
    EXPECT_EQ(f->order(), 4u);
    ASSERT_EQ(f->layer_count(), 1u);
    EXPECT_EQ(f->modulus(), (std::vector<Elem>{1, 1, 1}));
}

TEST(FieldConstruction, DegreeOneLayerIsPrimeField)
{
    auto f = make_field(3, {1}, 5);
    EXPECT_TRUE(f->is_prime_field());
    EXPECT_EQ(f->order(), 3u);
}

TEST(FieldConstruction, TwoLayerTowerHasSixteenElements)
{
    auto f = make_field(2, {2, 2}, 0);
    EXPECT_EQ(f->order(), 16u);
    std::set<Elem> seen;
    for (Elem a = 0; a < 16; ++a) {
        seen.insert(a);
        EXPECT_EQ(f->pow(a, Int(16)), a);
    }
    EXPECT_EQ(seen.size(), 16u);
    // Exactly 16 roots of x^16 - x, i.e. every element is distinct as a field element.
    for (Elem a = 1; a < 16; ++a) {
        EXPECT_NE(f->mul(a, f->inv(a)), 0u);
    }
}

TEST(FieldConstruction, Errors)
{
    EXPECT_THROW(make_field(4, {1}), DomainError);
    EXPECT_THROW(make_field(2, {0}), DomainError);
    auto f2 = Field::prime(2);
    EXPECT_THROW(Field::extend(f2, {1, 0, 1}), DomainError); // x^2+1 = (x+1)^2
}

TEST(FieldConstruction, SeedsAreReproducible)
{
    auto a = make_field(3, {4}, 11), b = make_field(3, {4}, 11);
    EXPECT_TRUE(a->same_as(*b));
    EXPECT_EQ(a->id(), b->id());
}

TEST(FieldArithmetic, MatchesNaiveQuotientRing)
{
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 5}, {3, 3}, {7, 2}}) {
        auto f = make_field(p, {d}, 3);
        NaiveExt n{p, f->modulus()};
        Rng rng(p * 100 + d);
        for (int i = 0; i < 300; ++i) {
            const Elem a = f->random(rng), b = f->random(rng);
            EXPECT_EQ(f->mul(a, b), n.mul(a, b));
            EXPECT_EQ(f->add(a, b), n.add(a, b));
        }
    }
}

TEST(FieldArithmetic, AxiomsOnSamples)
{
    std::vector<FieldRef> fields = {make_field(2, {2, 3}, 1), make_field(3, {2, 2}, 2), make_field(5, {3}, 0),
                                    make_field(2, {9, 2}, 0), make_field(3, {11}, 0)};
    for (const auto &fp : fields) {
        const Field &f = *fp;
        Rng rng(f.order());
        for (int i = 0; i < 200; ++i) {
            const Elem a = f.random(rng), b = f.random(rng), c = f.random(rng);
            EXPECT_EQ(f.add(a, b), f.add(b, a));
            EXPECT_EQ(f.mul(a, b), f.mul(b, a));
            EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            EXPECT_EQ(f.sub(f.add(a, b), b), a);
            if (a != 0) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            }
            EXPECT_EQ(f.pow(a, Int(f.order())), a);
        }
        // Multiplicative group has order q - 1.
        const Elem g = f.primitive_element();
        EXPECT_EQ(f.pow(g, Int(f.order() - 1)), 1u);
        for (auto r : prime_divisors(f.order() - 1)) {
            EXPECT_NE(f.pow(g, Int((f.order() - 1) / r)), 1u);
        }
    }
}

TEST(FieldMaps, NormAndTraceOnF4)
{
    auto f4 = make_field(2, {2});
    auto f2 = f4->base();
    const Elem w = f4->generator();
    EXPECT_EQ(norm(*f4, *f2, w), 1u);
    EXPECT_EQ(trace_field(*f4, *f2, w), 1u);
    EXPECT_EQ(norm(*f4, *f4, w), w);
    EXPECT_EQ(trace_field(*f4, *f4, w), w);
}

TEST(FieldMaps, NotASubtower)
{
    auto a = make_field(2, {2}), b = make_field(2, {3});
    EXPECT_THROW(norm(*b, *a, 1), DomainError);
}

TEST(FieldMaps, TransitiveAlongTowers)
{
    auto L = make_field(3, {2, 3}, 4);
    auto M = L->base();
    auto K = M->base();
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Elem x = L->random(rng);
        EXPECT_EQ(norm(*L, *K, x), norm(*M, *K, norm(*L, *M, x)));
        EXPECT_EQ(trace_field(*L, *K, x), trace_field(*M, *K, trace_field(*L, *M, x)));
    }
}

TEST(FieldMaps, PrimeToPRoot)
{
    auto f4 = make_field(2, {2});
    const Elem w = f4->generator();
    EXPECT_EQ(prime_to_p_root(*f4, w, Int(2)), f4->mul(w, w));
    EXPECT_EQ(prime_to_p_root(*f4, 1, Int(5)), 1u);
    auto f8 = make_field(2, {3});
    const Elem g = f8->primitive_element();
    EXPECT_EQ(prime_to_p_root(*f8, g, Int(4)), f8->mul(g, g));
    EXPECT_THROW(prime_to_p_root(*f4, w, Int(3)), DomainError);
    EXPECT_THROW(prime_to_p_root(*f4, 0, Int(2)), DomainError);
}

TEST(Factor, Examples)
{
    auto f2 = Field::prime(2), f3 = Field::prime(3);
    auto a = factor_poly(*f2, P({1, 1, 1}));
    ASSERT_EQ(a.factors.size(), 1u);
    EXPECT_EQ(a.factors[0].poly, P({1, 1, 1}));

    auto b = factor_poly(*f3, P({0, 2, 0, 1})); // T^3 - T
    ASSERT_EQ(b.factors.size(), 3u);
    for (const auto &fc : b.factors) {
        EXPECT_EQ(fc.multiplicity, 1u);
        EXPECT_EQ(fc.poly.size(), 2u);
    }

    auto c = factor_poly(*f2, P({1, 0, 1}));
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].poly, P({1, 1}));
    EXPECT_EQ(c.factors[0].multiplicity, 2u);

    EXPECT_THROW(factor_poly(*f2, FPoly{}), DomainError);
}

TEST(Factor, RandomPolynomialsRemultiply)
{
    std::vector<FieldRef> fields = {Field::prime(2), Field::prime(3), make_field(2, {2}), make_field(3, {2}),
                                    make_field(5, {1}), make_field(2, {2, 2})};
    Rng rng(77);
    for (const auto &fp : fields) {
        const Field &f = *fp;
        for (int i = 0; i < 60; ++i) {
            // Build with forced repeated factors part of the time.
            FPoly a(1 + rng.below(9));
            for (auto &x : a) {
                x = f.random(rng);
            }
            a.push_back(f.random_unit(rng));
            if (rng.coin()) {
                a = poly::mul(f, a, poly::pow(f, FPoly{f.random(rng), 1}, 1 + static_cast<unsigned>(rng.below(4))));
            }
            const auto fz = factor_poly(f, a, i);
            EXPECT_TRUE(poly::equal(f, expand_factorization(f, fz), a));
            for (const auto &fc : fz.factors) {
                EXPECT_TRUE(is_irreducible(f, fc.poly));
                EXPECT_EQ(fc.poly.back(), 1u);
            }
            // Independent count of roots by evaluation.
            std::size_t nroots = 0;
            for (Elem x = 0; x < f.order(); ++x) {
                nroots += poly::eval(f, a, x) == 0;
            }
            EXPECT_EQ(roots(f, a).size(), nroots);
        }
    }
}

TEST(Factor, IrreducibleCountMatchesNecklaceFormula)
{
    // Number of monic irreducible quartics over F_2 is 3, cubics over F_3 is 8.
    auto count = [](const FieldRef &f, unsigned d) {
        std::uint64_t n = 0, total = ipow(f->order(), d);
        for (std::uint64_t c = 0; c < total; ++c) {
            FPoly g(d + 1);
            std::uint64_t x = c;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = x % f->order();
                x /= f->order();
            }
            g[d] = 1;
            n += is_irreducible(*f, g);
            const auto fz = factor_poly(*f, g);
            const bool single = fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
            EXPECT_EQ(single, is_irreducible(*f, g));
        }
        return n;
    };
    EXPECT_EQ(count(Field::prime(2), 4), 3u);
    EXPECT_EQ(count(Field::prime(3), 3), 8u);
    EXPECT_EQ(count(make_field(2, {2}), 2), 6u);
}

TEST(Embedding, FindEmbeddingIsAHomomorphism)
{
    auto src = make_field(2, {2, 2}, 0);
    auto dst = make_field(2, {8}, 1);
    auto e = find_embedding(src, dst);
    for (Elem a = 0; a < src->order(); ++a) {
        for (Elem b = 0; b < src->order(); ++b) {
            EXPECT_EQ(e(src->mul(a, b)), dst->mul(e(a), e(b)));
            EXPECT_EQ(e(src->add(a, b)), dst->add(e(a), e(b)));
        }
    }
    std::set<Elem> img;
    for (Elem a = 0; a < src->order(); ++a) {
        img.insert(e(a));
    }
    EXPECT_EQ(img.size(), 16u);
}

TEST(TensorDecompose, DegreesTwoAndThree)
{
    auto K = make_field(2, {2});
    auto L = extend_by_degree(K, 2, 1);
    auto Kp = extend_by_degree(K, 3, 2);
    auto comps = tensor_decompose(L, Kp, K);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].field->degree(), K->degree() * 6);
    EXPECT_EQ(comps[0].multiplicity, 1u);
}

TEST(TensorDecompose, QuadraticSplitsOverItself)
{
    auto K = Field::prime(3);
    auto L = make_field(3, {2}, 0);
    auto comps = tensor_decompose(L, L, K);
    ASSERT_EQ(comps.size(), 2u);
    for (const auto &c : comps) {
        EXPECT_EQ(c.field->degree(), 2u);
    }
    // The two embeddings are the identity and Frobenius.
    const Elem g = L->generator();
    std::set<Elem> imgs{comps[0].from_l(g), comps[1].from_l(g)};
    EXPECT_EQ(imgs, (std::set<Elem>{g, L->frobenius(g)}));
}

TEST(TensorDecompose, TrivialExtension)
{
    auto K = make_field(5, {2});
    auto Kp = extend_by_degree(K, 3, 0);
    auto comps = tensor_decompose(K, Kp, K);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_TRUE(comps[0].field->same_as(*Kp));
}

TEST(TensorDecompose, MackeySquareForUnits)
{
    for (std::uint64_t p : {2u, 3u}) {
        auto K = Field::prime(p);
        for (unsigned a = 1; a <= 4; ++a) {
            for (unsigned b = 1; b <= 4; ++b) {
                auto L = extend_by_degree(K, a, 10 + a);
                auto Kp = extend_by_degree(K, b, 20 + b);
                auto comps = tensor_decompose(L, Kp, K);
                std::uint64_t total = 0;
                for (const auto &c : comps) {
                    total += relative_degree(*c.field, *Kp);
                }
                EXPECT_EQ(total, a);
                EXPECT_EQ(comps.size(), std::gcd(a, b));
                Rng rng(a * 10 + b);
                for (int i = 0; i < 20; ++i) {
                    const Elem x = L->random_unit(rng);
                    const Elem lhs = norm(*L, *K, x);
                    Elem rhs = 1;
                    for (const auto &c : comps) {
                        rhs = Kp->mul(rhs, norm(*c.field, *Kp, c.from_l(x)));
                    }
                    EXPECT_EQ(lhs, rhs);
                    const Elem lt = trace_field(*L, *K, x);
                    Elem rt = 0;
                    for (const auto &c : comps) {
                        rt = Kp->add(rt, trace_field(*c.field, *Kp, c.from_l(x)));
                    }
                    EXPECT_EQ(lt, rt);
                }
            }
        }
    }
}

TEST(FieldSpec, Grammar)
{
    EXPECT_EQ(parse_field("GF(7)")->order(), 7u);
    EXPECT_EQ(parse_field("GF(9)")->order(), 9u);
    EXPECT_EQ(parse_field("GF(2^4)")->layer_count(), 1u);
    auto t = parse_field("GF(2^4)/GF(2^2)");
    EXPECT_EQ(t->order(), 16u);
    EXPECT_EQ(t->layer_count(), 2u);
    EXPECT_THROW(parse_field("GF(6)"), ParseError);
    EXPECT_THROW(parse_field("GF(2^3)/GF(2^2)"), ParseError);
    try {
        parse_field("GF(2^2");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 6u);
    }
}
