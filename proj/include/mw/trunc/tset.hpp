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

#ifndef MW_TRUNC_TSET_HPP
#define MW_TRUNC_TSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <mw/core/arith.hpp>
#include <mw/core/cursor.hpp>
#include <mw/core/error.hpp>

namespace mw::trunc {

// Finite nonempty divisor-closed set of positive integers.
class TruncationSet
{
public:
    static TruncationSet validate(std::vector<std::uint64_t> elems)
    {
        normalize(elems);
        if (elems.empty()) {
            throw DomainError("truncation set is empty");
        }
        std::set<std::uint64_t> s(elems.begin(), elems.end());
        for (auto x : elems) {
            for (std::uint64_t d = 1; d * d <= x; ++d) {
                if (x % d == 0 && (!s.count(d) || !s.count(x / d))) {
                    throw DomainError("not divisor-closed: " + std::to_string(x) + " has divisor " +
                                      std::to_string(s.count(d) ? x / d : d) + " missing");
                }
            }
        }
        return TruncationSet(std::move(elems));
    }

    static TruncationSet divisor_closure(const std::vector<std::uint64_t> &elems)
    {
        std::vector<std::uint64_t> in = elems;
        normalize(in);
        if (in.empty()) {
            throw DomainError("truncation set is empty");
        }
        std::set<std::uint64_t> out;
        for (auto x : in) {
            for (std::uint64_t d = 1; d * d <= x; ++d) {
                if (x % d == 0) {
                    out.insert(d);
                    out.insert(x / d);
                }
            }
        }
        return TruncationSet(std::vector<std::uint64_t>(out.begin(), out.end()));
    }

    const std::vector<std::uint64_t> &elements() const
    {
        return m_elems;
    }
    std::size_t size() const
    {
        return m_elems.size();
    }
    std::uint64_t max() const
    {
        return m_elems.back();
    }
    bool contains(std::uint64_t s) const
    {
        return std::binary_search(m_elems.begin(), m_elems.end(), s);
    }
    // Position of s in the sorted element list.
    std::size_t index_of(std::uint64_t s) const
    {
        auto it = std::lower_bound(m_elems.begin(), m_elems.end(), s);
        if (it == m_elems.end() || *it != s) {
            throw DomainError(std::to_string(s) + " is not in the truncation set");
        }
        return static_cast<std::size_t>(it - m_elems.begin());
    }
    bool subset_of(const TruncationSet &o) const
    {
        return std::includes(o.m_elems.begin(), o.m_elems.end(), m_elems.begin(), m_elems.end());
    }
    std::string to_string() const
    {
        std::string out;
        for (auto x : m_elems) {
            out += (out.empty() ? "" : ",") + std::to_string(x);
        }
        return out;
    }
    bool operator==(const TruncationSet &) const = default;
    auto operator<=>(const TruncationSet &) const = default;

private:
    explicit TruncationSet(std::vector<std::uint64_t> e) : m_elems(std::move(e)) {}

    static void normalize(std::vector<std::uint64_t> &e)
    {
        for (auto x : e) {
            if (x == 0) {
                throw DomainError("truncation set elements must be positive");
            }
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }

    std::vector<std::uint64_t> m_elems;
};

// S/n = { s : ns in S }; nullopt stands for the empty set.
inline std::optional<TruncationSet> quotient(const TruncationSet &S, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("quotient by zero");
    }
    std::vector<std::uint64_t> out;
    for (auto s : S.elements()) {
        if (s % n == 0) {
            out.push_back(s / n);
        }
    }
    if (out.empty()) {
        return std::nullopt;
    }
    return TruncationSet::validate(std::move(out));
}

// S union pS.
inline TruncationSet p_extend(const TruncationSet &S, std::uint64_t p)
{
    if (p == 0) {
        throw DomainError("p_extend by zero");
    }
    std::vector<std::uint64_t> out = S.elements();
    for (auto s : S.elements()) {
        out.push_back(s * p);
    }
    return TruncationSet::validate(std::move(out));
}

// P_r = {1, p, ..., p^{r-1}}.
inline TruncationSet p_typical(std::uint64_t p, unsigned r)
{
    if (!is_prime(p)) {
        throw DomainError("p_typical needs a prime");
    }
    if (r == 0) {
        throw DomainError("p_typical needs r >= 1");
    }
    std::vector<std::uint64_t> out;
    std::uint64_t x = 1;
    for (unsigned i = 0; i < r; ++i) {
        out.push_back(x);
        x *= p;
    }
    return TruncationSet::validate(std::move(out));
}

inline bool is_p_typical(const TruncationSet &S, std::uint64_t p)
{
    return S == p_typical(p, static_cast<unsigned>(S.size()));
}

// Every truncation set inside {1..max_element} with at most max_size
// elements, grown one element at a time in increasing order.
inline std::vector<TruncationSet> all_truncation_sets(std::uint64_t max_element, std::size_t max_size)
{
    std::vector<TruncationSet> out;
    std::vector<std::uint64_t> cur{1};
    auto grow = [&](auto &&self, std::uint64_t next) -> void {
        out.push_back(TruncationSet::validate(cur));
        if (cur.size() == max_size) {
            return;
        }
        for (std::uint64_t x = next; x <= max_element; ++x) {
            bool closed = true;
            for (std::uint64_t d = 2; d < x && closed; ++d) {
                if (x % d == 0 && !std::binary_search(cur.begin(), cur.end(), d)) {
                    closed = false;
                }
            }
            if (closed) {
                cur.push_back(x);
                self(self, x + 1);
                cur.pop_back();
            }
        }
    };
    if (max_size > 0 && max_element > 0) {
        grow(grow, 2);
    }
    return out;
}

struct ProfileEntry {
    std::uint64_t m; // prime to p
    unsigned r;      // #(S/m intersect {1, p, p^2, ...})
    bool operator==(const ProfileEntry &) const = default;
};

inline std::vector<ProfileEntry> decomposition_profile(const TruncationSet &S, std::uint64_t p)
{
    if (!is_prime(p)) {
        throw DomainError("decomposition_profile needs a prime");
    }
    std::vector<ProfileEntry> out;
    std::size_t total = 0;
    for (auto m : S.elements()) {
        if (m % p == 0) {
            continue;
        }
        unsigned r = 0;
        for (std::uint64_t pk = 1; S.contains(m * pk); pk *= p) {
            ++r;
        }
        out.push_back({m, r});
        total += r;
    }
    if (total != S.size()) {
        throw Error("decomposition profile does not account for every element");
    }
    return out;
}

// Comma list "1,2,3,6" or shorthand "P(p,r)".
inline TruncationSet parse_tset(std::string_view s)
{
    Cursor c(s);
    if (c.accept('P')) {
        c.expect('(');
        const auto at = c.pos();
        const auto p = c.number();
        c.expect(',');
        const auto r = c.number();
        c.expect(')');
        c.expect_end();
        if (!is_prime(p)) {
            throw ParseError("P(p,r) needs a prime p", at);
        }
        if (r == 0 || r > 40) {
            throw ParseError("P(p,r) needs 1 <= r <= 40", at);
        }
        return p_typical(p, static_cast<unsigned>(r));
    }
    std::vector<std::uint64_t> elems;
    do {
        const auto at = c.pos();
        const auto x = c.number();
        if (x == 0) {
            throw ParseError("truncation set elements must be positive", at);
        }
        elems.push_back(x);
    } while (c.accept(','));
    c.expect_end();
    try {
        return TruncationSet::validate(std::move(elems));
    } catch (const DomainError &e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace mw::trunc

#endif
