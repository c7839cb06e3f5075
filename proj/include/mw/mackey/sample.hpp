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

#ifndef MW_MACKEY_SAMPLE_HPP
#define MW_MACKEY_SAMPLE_HPP

#include <cstdint>
#include <vector>

#include <mw/core/rng.hpp>
#include <mw/mackey/certificate.hpp>

namespace mw::mackey {

// Finite fields of order at most max_q, one tower per order.
inline std::vector<FieldRef> small_fields(std::uint64_t max_q)
{
    std::vector<FieldRef> out;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::uint64_t q = p;
        for (unsigned d = 1; q <= max_q; ++d, q *= p) {
            out.push_back(ff::make_field(p, {d}));
        }
    }
    return out;
}

// k itself or a random extension of degree 2 or 3 with order <= max_order.
inline FieldRef random_extension(const FieldRef &k, Rng &rng, std::uint64_t max_order)
{
    std::vector<unsigned> degs{1};
    for (unsigned d : {2u, 3u}) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < d && q <= max_order; ++i) {
            q *= k->order();
        }
        if (q <= max_order) {
            degs.push_back(d);
        }
    }
    const unsigned d = degs[rng.below(degs.size())];
    return ff::extend_by_degree(k, d, rng.below(4));
}

inline Symbol random_symbol(const FieldRef &K, unsigned r, std::size_t unit_slots, Rng &rng)
{
    Symbol s{K, {}, {}};
    for (unsigned i = 0; i < r; ++i) {
        s.witt.push_back(K->random(rng));
    }
    for (std::size_t i = 0; i < unit_slots; ++i) {
        s.units.push_back(K->random_unit(rng));
    }
    return s;
}

inline Term random_term(const FieldRef &k, unsigned r, unsigned n, Rng &rng, std::size_t max_entries = 3,
                        std::uint64_t max_order = 256)
{
    Term t;
    t.base = k;
    t.r = r;
    t.n = n;
    const std::size_t count = 1 + rng.below(max_entries);
    for (std::size_t i = 0; i < count; ++i) {
        const auto K = random_extension(k, rng, max_order);
        t.entries.push_back({Int(rng.range(-3, 3)), random_symbol(K, r, t.unit_slots(), rng)});
    }
    return t;
}

struct PfPair {
    Term before;
    Term after;
    Move move;
};

// A term and its image under one PF move (expansion or contraction).
inline PfPair random_pf_pair(const FieldRef &k, unsigned r, unsigned n, Rng &rng, std::uint64_t max_order = 256)
{
    Term t = random_term(k, r, n, rng, 2, max_order);
    const std::size_t e = rng.below(t.entries.size());
    const std::size_t slot = rng.below(t.slot_count());
    auto &sym = t.entries[e].sym;
    const FieldRef K = sym.field;
    const FieldRef L = random_extension(K, rng, max_order * max_order);
    Move m{MoveKind::PfExpand, e, slot, 0, L, {}, 0};
    if (t.is_witt_slot(slot)) {
        const auto W = witt_ring(L, r);
        std::vector<Elem> xi;
        for (unsigned i = 0; i < r; ++i) {
            xi.push_back(L->random(rng));
        }
        sym.witt = witt::witt_trace(W, witt_ring(K, r), xi);
        m.witness = xi;
    } else {
        const Elem xi = L->random_unit(rng);
        sym.units[t.unit_index(slot)] = ff::norm(*L, *K, xi);
        m.witness = {xi};
    }
    PfPair out{t, t, m};
    apply_move(out.after, m);
    if (rng.coin()) {
        // Read the same pair backwards as a contraction.
        Move back{MoveKind::PfContract, e, slot, 0, K, {}, 0};
        const auto &s = out.before.entries[e].sym;
        back.witness = t.is_witt_slot(slot) ? s.witt : std::vector<Elem>{s.units[t.unit_index(slot)]};
        Term check = out.after;
        apply_move(check, back);
        return {out.after, check, back};
    }
    return out;
}

} // namespace mw::mackey

#endif
