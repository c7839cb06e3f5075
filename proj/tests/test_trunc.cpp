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

#include <mw/core/rng.hpp>
#include <mw/trunc/tset.hpp>

using namespace mw;
using namespace mw::trunc;

using V = std::vector<std::uint64_t>;

namespace {

// Every truncation set contained in {1..n}, by brute-force subset filtering.
std::vector<TruncationSet> all_tsets(std::uint64_t n)
{
    std::vector<TruncationSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        V e;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (mask >> i & 1u) {
                e.push_back(i + 1);
            }
        }
        bool closed = !e.empty();
        for (auto x : e) {
            for (std::uint64_t d = 1; d <= x; ++d) {
                if (x % d == 0 && !(mask >> (d - 1) & 1u)) {
                    closed = false;
                }
            }
        }
        if (closed) {
            out.push_back(TruncationSet::validate(e));
        }
    }
    return out;
}

} // namespace

TEST(TruncationSet, Validate)
{
    EXPECT_EQ(TruncationSet::validate({1, 2, 4}).elements(), (V{1, 2, 4}));
    EXPECT_THROW(TruncationSet::validate({2, 4}), DomainError);
    EXPECT_THROW(TruncationSet::validate({1, 6}), DomainError);
    EXPECT_THROW(TruncationSet::validate({}), DomainError);
    EXPECT_EQ(TruncationSet::divisor_closure({12}).elements(), (V{1, 2, 3, 4, 6, 12}));
}

TEST(TruncationSet, Operations)
{
    const auto S = TruncationSet::validate({1, 2, 3, 4, 6});
    EXPECT_EQ(quotient(S, 2)->elements(), (V{1, 2, 3}));
    EXPECT_FALSE(quotient(TruncationSet::validate({1}), 2).has_value());
    EXPECT_EQ(p_typical(2, 3).elements(), (V{1, 2, 4}));
    EXPECT_EQ(p_extend(S, 2).elements(), (V{1, 2, 3, 4, 6, 8, 12}));
}

TEST(TruncationSet, Profile)
{
    const auto S = TruncationSet::validate({1, 2, 3, 4, 6});
    EXPECT_EQ(decomposition_profile(S, 2), (std::vector<ProfileEntry>{{1, 3}, {3, 2}}));
    EXPECT_EQ(decomposition_profile(p_typical(3, 4), 3), (std::vector<ProfileEntry>{{1, 4}}));
    EXPECT_EQ(decomposition_profile(TruncationSet::validate({1}), 5), (std::vector<ProfileEntry>{{1, 1}}));
}

TEST(TruncationSet, PropertiesOnAllSmallSets)
{
    const auto sets = all_tsets(16);
    EXPECT_GT(sets.size(), 100u);
    for (const auto &S : sets) {
        for (std::uint64_t a = 1; a <= 4; ++a) {
            for (std::uint64_t b = 1; b <= 4; ++b) {
                const auto qa = quotient(S, a);
                const auto lhs = qa ? quotient(*qa, b) : std::nullopt;
                EXPECT_EQ(lhs, quotient(S, a * b));
            }
        }
        for (std::uint64_t p : {2u, 3u, 5u}) {
            const auto E = p_extend(S, p);
            EXPECT_TRUE(S.subset_of(E));
            // Unique factorization s = m p^i: each element counted in exactly one profile entry.
            std::size_t total = 0;
            for (const auto &e : decomposition_profile(S, p)) {
                EXPECT_NE(e.m % p, 0u);
                total += e.r;
            }
            EXPECT_EQ(total, S.size());
        }
    }
}

TEST(TruncationSet, Parse)
{
    EXPECT_EQ(parse_tset("1,2,3,4,6").elements(), (V{1, 2, 3, 4, 6}));
    EXPECT_EQ(parse_tset("P(3,2)").elements(), (V{1, 3}));
    EXPECT_THROW(parse_tset("1,2,"), ParseError);
    EXPECT_THROW(parse_tset("2,4"), ParseError);
    EXPECT_THROW(parse_tset("P(4,2)"), ParseError);
}
