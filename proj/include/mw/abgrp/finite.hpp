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

#ifndef MW_ABGRP_FINITE_HPP
#define MW_ABGRP_FINITE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <mw/abgrp/group.hpp>
#include <mw/core/error.hpp>

namespace mw::abgrp {

// A finite group given by enumeration, split into cyclic factors.
struct FiniteStructure {
    std::vector<std::uint64_t> orders;           // descending, each > 1
    std::vector<std::size_t> generators;         // element indices
    std::vector<std::vector<std::uint64_t>> coords; // element index -> coordinates
    std::map<std::vector<std::uint64_t>, std::size_t> element_of; // inverse table

    // Invariant factors in ascending divisibility order.
    std::vector<Int> invariants() const
    {
        std::vector<Int> out(orders.rbegin(), orders.rend());
        return out;
    }
    Presentation presentation() const
    {
        Presentation g = free_group(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            Vec row(orders.size(), 0);
            row[i] = orders[i];
            g.relations.push_back(std::move(row));
        }
        return g;
    }
    Vec coords_vec(std::size_t idx) const
    {
        const auto &c = coords.at(idx);
        return Vec(c.begin(), c.end());
    }
};

constexpr std::size_t default_enumeration_bound = 4096;

// Greedy peeling: repeatedly take a coset of maximal order in G/H and lift
// it to an element of the same order. The resulting coordinates are checked
// to be a bijection before returning.
template <class AddFn, class NegFn>
FiniteStructure structure_of_indexed(std::size_t n, AddFn add, std::size_t zero, NegFn neg,
                                     std::size_t bound = default_enumeration_bound)
{
    if (n > bound) {
        throw BoundExceeded("finite carrier", n, bound);
    }
    auto checked_add = [&](std::size_t a, std::size_t b) {
        const std::size_t c = add(a, b);
        if (c >= n) {
            throw DomainError("operation not closed on carrier");
        }
        return c;
    };
    for (std::size_t x = 0; x < n; ++x) {
        if (checked_add(x, zero) != x || checked_add(x, neg(x)) != zero) {
            throw DomainError("carrier operation is not a group law");
        }
    }
    FiniteStructure s;
    std::vector<char> inH(n, 0);
    inH[zero] = 1;
    std::vector<std::size_t> H{zero};
    auto multiple = [&](std::size_t x, std::uint64_t k) {
        std::size_t r = zero;
        for (std::uint64_t i = 0; i < k; ++i) {
            r = checked_add(r, x);
        }
        return r;
    };
    while (H.size() < n) {
        std::size_t best = zero;
        std::uint64_t best_ord = 1;
        for (std::size_t x = 0; x < n; ++x) {
            if (inH[x]) {
                continue;
            }
            std::uint64_t m = 1;
            for (std::size_t y = x; !inH[y]; y = checked_add(y, x)) {
                ++m;
            }
            if (m > best_ord) {
                best_ord = m;
                best = x;
            }
        }
        // best_ord * best lies in H = sum of t_i g_i; subtract (t_i / m) g_i.
        const auto target = multiple(best, best_ord);
        std::vector<std::uint64_t> t(s.orders.size(), 0);
        if (!s.orders.empty()) {
            // Coordinates of target inside the subgroup generated so far.
            std::vector<std::uint64_t> c(s.orders.size(), 0);
            bool found = false;
            for (;;) {
                std::size_t e = zero;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    e = checked_add(e, multiple(s.generators[i], c[i]));
                }
                if (e == target) {
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < c.size() && ++c[i] == s.orders[i]) {
                    c[i++] = 0;
                }
                if (i == c.size()) {
                    break;
                }
            }
            if (!found) {
                throw Error("structure_of_finite: subgroup bookkeeping failed");
            }
            t = c;
        }
        std::size_t h = best;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] % best_ord != 0) {
                throw Error("structure_of_finite: lift does not split");
            }
            const std::uint64_t k = t[i] / best_ord;
            h = checked_add(h, neg(multiple(s.generators[i], k)));
        }
        s.generators.push_back(h);
        s.orders.push_back(best_ord);
        std::vector<std::size_t> next;
        next.reserve(H.size() * best_ord);
        for (std::size_t y : H) {
            std::size_t z = y;
            for (std::uint64_t k = 0; k < best_ord; ++k) {
                if (k > 0) {
                    next.push_back(z);
                    inH[z] = 1;
                }
                z = checked_add(z, h);
            }
        }
        H.insert(H.end(), next.begin(), next.end());
    }
    // Isomorphism table, verified to be a bijection.
    s.coords.assign(n, {});
    std::vector<char> seen(n, 0);
    std::vector<std::uint64_t> c(s.orders.size(), 0);
    std::size_t cur = zero;
    std::size_t count = 0;
    for (;;) {
        if (seen[cur]) {
            throw Error("structure_of_finite: coordinates not injective");
        }
        seen[cur] = 1;
        s.coords[cur] = c;
        s.element_of[c] = cur;
        ++count;
        std::size_t i = 0;
        while (i < c.size()) {
            cur = checked_add(cur, s.generators[i]);
            if (++c[i] < s.orders[i]) {
                break;
            }
            c[i++] = 0; // wrapped: cur is back to its value before this digit started
        }
        if (i == c.size()) {
            break;
        }
    }
    if (count != n) {
        throw Error("structure_of_finite: coordinates not surjective");
    }
    return s;
}

// Carrier given as a list of values with an addition on values.
template <class T, class AddFn, class NegFn>
FiniteStructure structure_of_finite(const std::vector<T> &carrier, AddFn add, const T &zero, NegFn neg,
                                    std::size_t bound = default_enumeration_bound)
{
    if (carrier.size() > bound) {
        throw BoundExceeded("finite carrier", carrier.size(), bound);
    }
    std::map<T, std::size_t> index;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (!index.emplace(carrier[i], i).second) {
            throw DomainError("carrier has repeated elements");
        }
    }
    auto lookup = [&](const T &x) {
        auto it = index.find(x);
        if (it == index.end()) {
            throw DomainError("operation not closed on carrier");
        }
        return it->second;
    };
    return structure_of_indexed(
        carrier.size(), [&](std::size_t a, std::size_t b) { return lookup(add(carrier[a], carrier[b])); },
        lookup(zero), [&](std::size_t a) { return lookup(neg(carrier[a])); }, bound);
}

} // namespace mw::abgrp

#endif
