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

#include <numeric>
#include <vector>

#include <mw/abgrp/finite.hpp>
#include <mw/abgrp/group.hpp>
#include <mw/core/rng.hpp>

using namespace mw;
using namespace mw::abgrp;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs)
{
    return std::vector<Int>(xs.begin(), xs.end());
}

Presentation pres(std::size_t n, std::vector<std::vector<long>> rows)
{
    Presentation g = free_group(n);
    for (auto &r : rows) {
        g.relations.push_back(Vec(r.begin(), r.end()));
    }
    return g;
}

// Order of Z^n / rowspan(A) for full-rank square A by the determinant, an
// independent check of the product of invariant factors.
Int det(Matrix a)
{
    const std::size_t n = a.size();
    Int d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t piv = n;
            for (std::size_t r = c; r < n; ++r) {
                if (a[r][c] != 0 && (piv == n || abs(a[r][c]) < abs(a[piv][c]))) {
                    piv = r;
                }
            }
            if (piv == n) {
                return 0;
            }
            if (piv != c) {
                std::swap(a[piv], a[c]);
                d = -d;
            }
            bool done = true;
            for (std::size_t r = c + 1; r < n; ++r) {
                const Int q = a[r][c] / a[c][c];
                for (std::size_t k = c; k < n; ++k) {
                    a[r][k] -= q * a[c][k];
                }
                done = done && a[r][c] == 0;
            }
            if (done) {
                break;
            }
        }
        d *= a[c][c];
    }
    return d;
}

} // namespace

TEST(Smith, Examples)
{
    EXPECT_EQ(smith_invariants(pres(2, {{2, 4}, {6, 8}})), ints({2, 4}));
    EXPECT_EQ(smith_invariants(pres(2, {})), ints({0, 0}));
    EXPECT_EQ(smith_invariants(pres(2, {{1, 0}, {0, 1}})), ints({}));
    EXPECT_EQ(smith_invariants(pres(2, {{2, 0}, {0, 3}})), ints({6}));
    EXPECT_EQ(smith_invariants(pres(3, {{2, 0, 0}, {0, 4, 0}})), ints({2, 4, 0}));
}

TEST(Smith, DivisibilityChainAndDeterminant)
{
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 1 + rng.below(4);
        Presentation g = free_group(n);
        for (std::size_t r = 0; r < n; ++r) {
            Vec row(n);
            for (auto &x : row) {
                x = rng.range(-9, 9);
            }
            g.relations.push_back(row);
        }
        const auto inv = smith_invariants(g);
        const Int d = abs(det(g.relations));
        Int prod = 1;
        bool free = false;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            if (inv[i] == 0) {
                free = true;
                continue;
            }
            EXPECT_FALSE(free) << "zeros must trail";
            prod *= inv[i];
            if (i + 1 < inv.size() && inv[i + 1] != 0) {
                EXPECT_EQ(inv[i + 1] % inv[i], 0);
            }
        }
        if (d != 0) {
            EXPECT_EQ(prod, d);
        } else {
            EXPECT_TRUE(free);
        }
    }
}

TEST(Smith, InvariantUnderUnimodularOperations)
{
    Rng rng(6);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = 2 + rng.below(3);
        Presentation g = free_group(n);
        for (std::size_t r = 0; r < n + 1; ++r) {
            Vec row(n);
            for (auto &x : row) {
                x = rng.range(-6, 6);
            }
            g.relations.push_back(row);
        }
        const auto base = smith_invariants(g);
        Presentation h = g;
        for (int k = 0; k < 10; ++k) {
            const std::size_t a = rng.below(h.relations.size()), b = rng.below(h.relations.size());
            if (a != b) {
                const Int q = rng.range(-3, 3);
                for (std::size_t j = 0; j < n; ++j) {
                    h.relations[a][j] += q * h.relations[b][j];
                }
            }
            std::swap(h.relations[rng.below(h.relations.size())], h.relations[rng.below(h.relations.size())]);
            const std::size_t c1 = rng.below(n), c2 = rng.below(n);
            for (auto &row : h.relations) {
                std::swap(row[c1], row[c2]);
            }
        }
        EXPECT_EQ(smith_invariants(h), base);
    }
}

TEST(Tensor, Examples)
{
    EXPECT_EQ(smith_invariants(tensor(cyclic(4), cyclic(6))), ints({2}));
    EXPECT_EQ(smith_invariants(tensor(cyclic(2), cyclic(3))), ints({}));
    const auto G = pres(2, {{2, 0}, {0, 12}});
    EXPECT_EQ(smith_invariants(tensor(G, cyclic(0))), smith_invariants(G));
}

TEST(Tensor, CommutesWithSwapAndMatchesGcdFormula)
{
    Rng rng(8);
    for (int it = 0; it < 50; ++it) {
        const long a = rng.range(1, 30), b = rng.range(1, 30), c = rng.range(1, 30);
        const auto G = pres(2, {{a, 0}, {0, b}});
        const auto Hh = cyclic(c);
        EXPECT_EQ(smith_invariants(tensor(G, Hh)), smith_invariants(tensor(Hh, G)));
        EXPECT_EQ(group_order(tensor(G, Hh)), Int(std::gcd(a, c) * std::gcd(b, c)));
    }
}

TEST(Quotient, Examples)
{
    // Cokernel of multiplication by 2 on Z/4.
    const auto Z4 = cyclic(4);
    EXPECT_EQ(smith_invariants(cokernel(Z4, Z4, {ints({2})})), ints({2}));
    EXPECT_EQ(smith_invariants(quotient_by(free_group(2), {ints({2, 0}), ints({0, 3})})), ints({6}));
    EXPECT_TRUE(is_zero_in(Z4, ints({4})));
    EXPECT_FALSE(is_zero_in(Z4, ints({2})));
    EXPECT_EQ(element_order(Z4, ints({2})), 2);
    EXPECT_EQ(element_order(cyclic(0), ints({3})), 0);
    // Z/2 -> Z/3 sending the generator to 1 does not respect relations.
    EXPECT_THROW(cokernel(cyclic(2), cyclic(3), {ints({1})}), DomainError);
}

TEST(Quotient, MembershipAgainstBruteForce)
{
    Rng rng(9);
    for (int it = 0; it < 40; ++it) {
        Presentation g = free_group(2);
        for (int r = 0; r < 2; ++r) {
            g.relations.push_back({rng.range(-6, 6), rng.range(-6, 6)});
        }
        const Int ord = group_order(g);
        if (ord == 0) {
            continue;
        }
        // Brute force: v is a relation combination iff some small integer combination hits it.
        Reducer red(g);
        for (long x = -4; x <= 4; ++x) {
            for (long y = -4; y <= 4; ++y) {
                bool hit = false;
                for (long s = -30; s <= 30 && !hit; ++s) {
                    for (long t = -30; t <= 30 && !hit; ++t) {
                        hit = s * g.relations[0][0] + t * g.relations[1][0] == x &&
                              s * g.relations[0][1] + t * g.relations[1][1] == y;
                    }
                }
                if (hit) {
                    EXPECT_TRUE(red.is_zero({x, y}));
                }
                // Elements times the group order always vanish.
                EXPECT_TRUE(red.is_zero({x * ord, y * ord}));
            }
        }
    }
}

TEST(Finite, Examples)
{
    std::vector<std::vector<int>> klein = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto addk = [](const std::vector<int> &a, const std::vector<int> &b) {
        return std::vector<int>{(a[0] + b[0]) % 2, (a[1] + b[1]) % 2};
    };
    auto s = structure_of_finite(klein, addk, klein[0], [](const std::vector<int> &a) { return a; });
    EXPECT_EQ(s.invariants(), ints({2, 2}));

    std::vector<int> triv{0};
    auto t = structure_of_finite(
        triv, [](int, int) { return 0; }, 0, [](int) { return 0; });
    EXPECT_TRUE(t.invariants().empty());
}

TEST(Finite, AgreesWithSmithOnProducts)
{
    for (auto dims : std::vector<std::vector<int>>{{4}, {2, 4}, {3, 9}, {2, 2, 4}, {6, 10}, {12, 18}, {5, 25, 5}}) {
        std::vector<std::vector<int>> carrier{{}};
        for (int m : dims) {
            std::vector<std::vector<int>> next;
            for (auto &c : carrier) {
                for (int k = 0; k < m; ++k) {
                    auto d = c;
                    d.push_back(k);
                    next.push_back(d);
                }
            }
            carrier = next;
        }
        auto add = [&](const std::vector<int> &a, const std::vector<int> &b) {
            std::vector<int> r(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = (a[i] + b[i]) % dims[i];
            }
            return r;
        };
        auto neg = [&](const std::vector<int> &a) {
            std::vector<int> r(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = (dims[i] - a[i]) % dims[i];
            }
            return r;
        };
        auto s = structure_of_finite(carrier, add, std::vector<int>(dims.size(), 0), neg);
        Presentation g = free_group(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            Vec row(dims.size(), 0);
            row[i] = dims[i];
            g.relations.push_back(row);
        }
        EXPECT_EQ(s.invariants(), smith_invariants(g));
        // The coordinate table is additive.
        for (std::size_t a = 0; a < carrier.size(); a += 3) {
            for (std::size_t b = 0; b < carrier.size(); b += 5) {
                const auto sum = s.element_of.at([&] {
                    std::vector<std::uint64_t> c(s.orders.size());
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        c[i] = (s.coords[a][i] + s.coords[b][i]) % s.orders[i];
                    }
                    return c;
                }());
                EXPECT_EQ(carrier[sum], add(carrier[a], carrier[b]));
            }
        }
    }
}

TEST(Finite, Errors)
{
    std::vector<int> c(5000);
    std::iota(c.begin(), c.end(), 0);
    EXPECT_THROW(structure_of_finite(
                     c, [](int a, int b) { return (a + b) % 5000; }, 0, [](int a) { return (5000 - a) % 5000; }),
                 BoundExceeded);
    std::vector<int> d{0, 1, 2};
    EXPECT_THROW(structure_of_finite(
                     d, [](int a, int b) { return a + b; }, 0, [](int a) { return -a; }),
                 DomainError);
}
