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

#ifndef MW_MACKEY_CERTIFICATE_HPP
#define MW_MACKEY_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/ff/maps.hpp>
#include <mw/mackey/term.hpp>
#include <mw/witt/maps.hpp>

namespace mw::mackey {

enum class MoveKind {
    PfExpand,      // slot = tr_{L/K}(witness): move the symbol up to L
    PfContract,    // other slots lie in K: move the symbol down to K, slot becomes witness = tr_{L/K}(slot)
    Split,         // slot = w1 * w2 (units) or w1 + w2 (Witt): one symbol becomes two
    Merge,         // two symbols differing only in one slot become one
    WpRelation,    // Witt slot = wp(witness): the symbol vanishes
    ScalarStep,    // slot = witness^m (units) or m * witness (Witt): coefficient times m
    ScaleIntoSlot, // coefficient m moves into the slot
    DropTrivial,   // a unit slot is 1, the Witt slot is 0, or the coefficient is 0
    DropModulus,   // coefficient divisible by the modulus
    Combine        // equal symbols: add coefficients
};

inline const char *move_name(MoveKind k)
{
    switch (k) {
    case MoveKind::PfExpand:
        return "pf_expand";
    case MoveKind::PfContract:
        return "pf_contract";
    case MoveKind::Split:
        return "split";
    case MoveKind::Merge:
        return "merge";
    case MoveKind::WpRelation:
        return "wp_relation";
    case MoveKind::ScalarStep:
        return "scalar_step";
    case MoveKind::ScaleIntoSlot:
        return "scale_into_slot";
    case MoveKind::DropTrivial:
        return "drop_trivial";
    case MoveKind::DropModulus:
        return "drop_modulus";
    case MoveKind::Combine:
        return "combine";
    }
    return "?";
}

inline std::optional<MoveKind> move_from_name(const std::string &s)
{
    for (int k = 0; k <= static_cast<int>(MoveKind::Combine); ++k) {
        if (s == move_name(static_cast<MoveKind>(k))) {
            return static_cast<MoveKind>(k);
        }
    }
    return std::nullopt;
}

struct Move {
    MoveKind kind;
    std::size_t entry = 0;
    std::size_t slot = 0;
    std::size_t other = 0;      // Merge / Combine
    FieldRef field;             // L for PfExpand, K for PfContract
    std::vector<Elem> witness;  // one unit, or r Witt coordinates; doubled for Split
    Int scalar = 0;             // ScalarStep / ScaleIntoSlot
};

struct Certificate {
    Term initial;
    std::vector<Move> moves;
};

struct Verdict {
    bool ok = false;
    std::optional<std::size_t> failed_move; // index of the first rejected move
    std::string reason;
    Term final_term;
};

namespace detail {

inline Entry &entry_at(Term &t, std::size_t i)
{
    if (i >= t.entries.size()) {
        throw MoveError("entry index out of range");
    }
    return t.entries[i];
}

inline void check_slot(const Term &t, std::size_t slot)
{
    if (slot >= t.slot_count()) {
        throw MoveError("slot index out of range");
    }
}

inline std::vector<Elem> witt_witness(const Move &m, const Term &t, std::size_t offset = 0)
{
    if (m.witness.size() < offset + t.r) {
        throw MoveError("Witt witness too short");
    }
    return std::vector<Elem>(m.witness.begin() + static_cast<std::ptrdiff_t>(offset),
                             m.witness.begin() + static_cast<std::ptrdiff_t>(offset + t.r));
}

inline Elem unit_witness(const Move &m, const Field &F, std::size_t pos = 0)
{
    if (m.witness.size() <= pos) {
        throw MoveError("missing unit witness");
    }
    const Elem u = m.witness[pos];
    if (u == 0 || !F.contains(u)) {
        throw MoveError("witness is not a unit of " + F.spec());
    }
    return u;
}

inline void check_witt_vector(const Field &F, const std::vector<Elem> &v)
{
    for (auto x : v) {
        if (!F.contains(x)) {
            throw MoveError("Witt witness coordinate outside " + F.spec());
        }
    }
}

} // namespace detail



// Applies one move, throwing MoveError when its local claim fails.
inline void apply_move(Term &t, const Move &m)
{
    using namespace detail;
    switch (m.kind) {
    case MoveKind::PfExpand: {
        Entry &e = entry_at(t, m.entry);
        check_slot(t, m.slot);
        if (!m.field) {
            throw MoveError("pf_expand needs a target field");
        }
        const FieldRef &K = e.sym.field;
        const FieldRef &L = m.field;
        if (!K->is_subtower_of(*L)) {
            throw MoveError("symbol field is not a subtower of the expansion field");
        }
        if (t.is_witt_slot(m.slot)) {
            const auto xi = witt_witness(m, t);
            check_witt_vector(*L, xi);
            if (witt::witt_trace(witt_ring(L, t.r), witt_ring(K, t.r), xi) != e.sym.witt) {
                throw MoveError("Witt slot is not the trace of the witness");
            }
            e.sym.witt = xi;
        } else {
            const Elem xi = unit_witness(m, *L);
            if (ff::norm(*L, *K, xi) != e.sym.units[t.unit_index(m.slot)]) {
                throw MoveError("unit slot is not the norm of the witness");
            }
            e.sym.units[t.unit_index(m.slot)] = xi;
        }
        e.sym.field = L; // restriction is the identity on codes
        return;
    }
    case MoveKind::PfContract: {
        Entry &e = entry_at(t, m.entry);
        check_slot(t, m.slot);
        if (!m.field) {
            throw MoveError("pf_contract needs a target field");
        }
        const FieldRef &L = e.sym.field;
        const FieldRef &K = m.field;
        if (!K->is_subtower_of(*L) || !t.base->is_subtower_of(*K)) {
            throw MoveError("contraction field is not between base and symbol field");
        }
        for (std::size_t s = 0; s < t.slot_count(); ++s) {
            if (s == m.slot) {
                continue;
            }
            if (t.is_witt_slot(s)) {
                for (auto x : e.sym.witt) {
                    if (!K->contains(x)) {
                        throw MoveError("Witt slot is not a restriction from the contraction field");
                    }
                }
            } else if (!K->contains(e.sym.units[t.unit_index(s)])) {
                throw MoveError("unit slot is not a restriction from the contraction field");
            }
        }
        if (t.is_witt_slot(m.slot)) {
            const auto w = witt_witness(m, t);
            if (witt::witt_trace(witt_ring(L, t.r), witt_ring(K, t.r), e.sym.witt) != w) {
                throw MoveError("witness is not the trace of the Witt slot");
            }
            e.sym.witt = w;
        } else {
            const Elem w = unit_witness(m, *K);
            if (ff::norm(*L, *K, e.sym.units[t.unit_index(m.slot)]) != w) {
                throw MoveError("witness is not the norm of the unit slot");
            }
            e.sym.units[t.unit_index(m.slot)] = w;
        }
        e.sym.field = K;
        return;
    }
    case MoveKind::Split: {
        Entry &e = entry_at(t, m.entry);
        check_slot(t, m.slot);
        const Field &K = *e.sym.field;
        Entry second = e;
        if (t.is_witt_slot(m.slot)) {
            const auto a = witt_witness(m, t, 0), b = witt_witness(m, t, t.r);
            check_witt_vector(K, a);
            check_witt_vector(K, b);
            const auto W = witt_ring(e.sym.field, t.r);
            if (W.add(a, b) != e.sym.witt) {
                throw MoveError("Witt slot is not the sum of the witnesses");
            }
            e.sym.witt = a;
            second.sym.witt = b;
        } else {
            const Elem a = unit_witness(m, K, 0), b = unit_witness(m, K, 1);
            if (K.mul(a, b) != e.sym.units[t.unit_index(m.slot)]) {
                throw MoveError("unit slot is not the product of the witnesses");
            }
            e.sym.units[t.unit_index(m.slot)] = a;
            second.sym.units[t.unit_index(m.slot)] = b;
        }
        t.entries.insert(t.entries.begin() + static_cast<std::ptrdiff_t>(m.entry) + 1, std::move(second));
        return;
    }
    case MoveKind::Merge: {
        check_slot(t, m.slot);
        if (m.entry == m.other) {
            throw MoveError("merge needs two distinct entries");
        }
        Entry &a = entry_at(t, m.entry);
        const Entry &b = entry_at(t, m.other);
        if (a.coeff != b.coeff || !a.sym.field->same_as(*b.sym.field)) {
            throw MoveError("merged entries must share coefficient and field");
        }
        for (std::size_t s = 0; s < t.slot_count(); ++s) {
            if (s == m.slot) {
                continue;
            }
            const bool same = t.is_witt_slot(s) ? a.sym.witt == b.sym.witt
                                                : a.sym.units[t.unit_index(s)] == b.sym.units[t.unit_index(s)];
            if (!same) {
                throw MoveError("merged entries differ outside the merge slot");
            }
        }
        if (t.is_witt_slot(m.slot)) {
            a.sym.witt = witt_ring(a.sym.field, t.r).add(a.sym.witt, b.sym.witt);
        } else {
            const auto i = t.unit_index(m.slot);
            a.sym.units[i] = a.sym.field->mul(a.sym.units[i], b.sym.units[i]);
        }
        t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(m.other));
        return;
    }
    case MoveKind::WpRelation: {
        Entry &e = entry_at(t, m.entry);
        if (t.r == 0) {
            throw MoveError("wp_relation needs a Witt slot");
        }
        const auto alpha = witt_witness(m, t);
        check_witt_vector(*e.sym.field, alpha);
        if (witt::wp(witt_ring(e.sym.field, t.r), alpha) != e.sym.witt) {
            throw MoveError("Witt slot is not wp of the witness");
        }
        t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(m.entry));
        return;
    }
    case MoveKind::ScalarStep: {
        Entry &e = entry_at(t, m.entry);
        check_slot(t, m.slot);
        if (m.scalar == 0) {
            throw MoveError("scalar step needs a nonzero scalar");
        }
        if (t.is_witt_slot(m.slot)) {
            const auto c = witt_witness(m, t);
            check_witt_vector(*e.sym.field, c);
            if (witt_ring(e.sym.field, t.r).scale(m.scalar, c) != e.sym.witt) {
                throw MoveError("Witt slot is not the scalar multiple of the witness");
            }
            e.sym.witt = c;
        } else {
            const Elem c = unit_witness(m, *e.sym.field);
            if (e.sym.field->pow(c, m.scalar) != e.sym.units[t.unit_index(m.slot)]) {
                throw MoveError("unit slot is not the stated power of the witness");
            }
            e.sym.units[t.unit_index(m.slot)] = c;
        }
        e.coeff *= m.scalar;
        return;
    }
    case MoveKind::ScaleIntoSlot: {
        Entry &e = entry_at(t, m.entry);
        check_slot(t, m.slot);
        if (m.scalar != e.coeff) {
            throw MoveError("scale_into_slot scalar must equal the coefficient");
        }
        if (t.is_witt_slot(m.slot)) {
            e.sym.witt = witt_ring(e.sym.field, t.r).scale(m.scalar, e.sym.witt);
        } else {
            const auto i = t.unit_index(m.slot);
            e.sym.units[i] = e.sym.field->pow(e.sym.units[i], m.scalar);
        }
        e.coeff = 1;
        return;
    }
    case MoveKind::DropTrivial: {
        Entry &e = entry_at(t, m.entry);
        bool trivial = e.coeff == 0;
        for (auto u : e.sym.units) {
            trivial = trivial || u == 1;
        }
        if (t.r > 0) {
            bool zero = true;
            for (auto x : e.sym.witt) {
                zero = zero && x == 0;
            }
            trivial = trivial || zero;
        }
        if (!trivial) {
            throw MoveError("symbol is not trivially zero");
        }
        t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(m.entry));
        return;
    }
    case MoveKind::DropModulus: {
        const Entry &e = entry_at(t, m.entry);
        if (t.modulus == 0 || e.coeff % t.modulus != 0) {
            throw MoveError("coefficient is not divisible by the modulus");
        }
        t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(m.entry));
        return;
    }
    case MoveKind::Combine: {
        if (m.entry == m.other) {
            throw MoveError("combine needs two distinct entries");
        }
        Entry &a = entry_at(t, m.entry);
        const Entry &b = entry_at(t, m.other);
        if (!same_symbol(a.sym, b.sym)) {
            throw MoveError("combined entries are different symbols");
        }
        a.coeff += b.coeff;
        t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(m.other));
        return;
    }
    }
    throw MoveError("unknown move");
}

inline Verdict verify_certificate(const Certificate &c)
{
    Verdict v;
    v.final_term = c.initial;
    try {
        validate_term(v.final_term);
    } catch (const Error &e) {
        v.reason = std::string("invalid initial term: ") + e.what();
        return v;
    }
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
        try {
            apply_move(v.final_term, c.moves[i]);
        } catch (const Error &e) {
            v.failed_move = i;
            v.reason = std::string(move_name(c.moves[i].kind)) + ": " + e.what();
            return v;
        }
    }
    if (!v.final_term.empty()) {
        v.reason = "final term is not empty";
        return v;
    }
    v.ok = true;
    return v;
}

// A single PF move on a term, in either direction.
inline Term pf_move(Term t, std::size_t entry, std::size_t slot, bool expand, const FieldRef &field,
                    std::vector<Elem> witness)
{
    Move m{expand ? MoveKind::PfExpand : MoveKind::PfContract, entry, slot, 0, field, std::move(witness), 0};
    apply_move(t, m);
    return t;
}

} // namespace mw::mackey

#endif
