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

// Re-evaluates the local claim of a certificate move with naive arithmetic:
// norms and traces as products and sums of explicit conjugates x^(|K|^i),
// powers by repeated multiplication, wp via coordinatewise p-th powers.

#ifndef MW_TESTS_CLAIM_ORACLE_HPP
#define MW_TESTS_CLAIM_ORACLE_HPP

#include <optional>
#include <vector>

#include <mw/mackey/certificate.hpp>

namespace oracle {

using mw::Int;
using mw::ff::Elem;
using mw::ff::Field;
using mw::mackey::Move;
using mw::mackey::MoveKind;
using mw::mackey::Term;

inline Elem naive_pow(const Field &F, Elem x, Int e)
{
    if (e < 0) {
        x = F.inv(x);
        e = -e;
    }
    Elem acc = F.one();
    for (Int i = 0; i < e; ++i) {
        acc = F.mul(acc, x);
    }
    return acc;
}

inline Elem power_q(const Field &F, Elem x, std::uint64_t q)
{
    // x^q by q-fold p-th powers: q is a power of p.
    const auto p = F.characteristic();
    for (std::uint64_t s = 1; s < q; s *= p) {
        x = naive_pow(F, x, Int(p));
    }
    return x;
}

inline std::vector<Elem> conjugates(const Field &L, const Field &K, Elem x)
{
    std::vector<Elem> out;
    Elem c = x;
    do {
        out.push_back(c);
        c = power_q(L, c, K.order());
    } while (c != x);
    // each conjugate repeats [L:K]/|orbit| times
    std::vector<Elem> full;
    const std::uint64_t deg = L.degree() / K.degree();
    for (std::uint64_t i = 0; i < deg; ++i) {
        full.push_back(out[i % out.size()]);
    }
    return full;
}

inline Elem norm(const Field &L, const Field &K, Elem x)
{
    Elem acc = L.one();
    for (auto c : conjugates(L, K, x)) {
        acc = L.mul(acc, c);
    }
    return acc;
}

inline std::vector<Elem> witt_trace(const Field &L, const Field &K, unsigned r, const std::vector<Elem> &x,
                                    const mw::witt::FieldWitt &W)
{
    std::vector<std::vector<Elem>> conj(L.degree() / K.degree());
    for (unsigned i = 0; i < r; ++i) {
        const auto c = conjugates(L, K, x[i]);
        for (std::size_t j = 0; j < c.size(); ++j) {
            conj[j].push_back(c[j]);
        }
    }
    auto acc = W.zero();
    for (const auto &v : conj) {
        acc = W.add(acc, v);
    }
    return acc;
}

// True iff the move's claim holds on the given term state. Structural
// preconditions (indices, fields) are assumed valid.
inline std::optional<bool> claim_holds(const Term &t, const Move &m)
{
    using namespace mw::mackey;
    if (m.entry >= t.entries.size()) {
        return std::nullopt;
    }
    const auto &e = t.entries[m.entry];
    const Field &K = *e.sym.field;
    const bool witt_slot = t.is_witt_slot(m.slot);
    auto in = [&](const Field &F, const std::vector<Elem> &v) {
        for (auto x : v) {
            if (!F.contains(x)) {
                return false;
            }
        }
        return true;
    };
    switch (m.kind) {
    case MoveKind::PfExpand: {
        const Field &L = *m.field;
        if (witt_slot) {
            if (m.witness.size() != t.r || !in(L, m.witness)) {
                return false;
            }
            return witt_trace(L, K, t.r, m.witness, witt_ring(m.field, t.r)) == e.sym.witt;
        }
        if (m.witness.size() != 1 || m.witness[0] == 0 || !L.contains(m.witness[0])) {
            return false;
        }
        return oracle::norm(L, K, m.witness[0]) == e.sym.units[t.unit_index(m.slot)];
    }
    case MoveKind::PfContract: {
        const Field &Kd = *m.field;
        if (witt_slot) {
            if (m.witness.size() != t.r || !in(Kd, m.witness)) {
                return false;
            }
            return witt_trace(K, Kd, t.r, e.sym.witt, witt_ring(e.sym.field, t.r)) == m.witness;
        }
        if (m.witness.size() != 1 || m.witness[0] == 0 || !Kd.contains(m.witness[0])) {
            return false;
        }
        return oracle::norm(K, Kd, e.sym.units[t.unit_index(m.slot)]) == m.witness[0];
    }
    case MoveKind::Split: {
        if (witt_slot) {
            if (m.witness.size() != 2 * t.r || !in(K, m.witness)) {
                return false;
            }
            const auto W = witt_ring(e.sym.field, t.r);
            std::vector<Elem> a(m.witness.begin(), m.witness.begin() + t.r), b(m.witness.begin() + t.r, m.witness.end());
            return W.add(a, b) == e.sym.witt;
        }
        if (m.witness.size() != 2 || m.witness[0] == 0 || m.witness[1] == 0 || !in(K, m.witness)) {
            return false;
        }
        return K.mul(m.witness[0], m.witness[1]) == e.sym.units[t.unit_index(m.slot)];
    }
    case MoveKind::WpRelation: {
        if (m.witness.size() != t.r || !in(K, m.witness)) {
            return false;
        }
        const auto W = witt_ring(e.sym.field, t.r);
        std::vector<Elem> frob;
        for (auto x : m.witness) {
            frob.push_back(naive_pow(K, x, Int(K.characteristic())));
        }
        return W.sub(frob, m.witness) == e.sym.witt;
    }
    case MoveKind::ScalarStep: {
        if (m.scalar == 0) {
            return false;
        }
        if (witt_slot) {
            if (m.witness.size() != t.r || !in(K, m.witness)) {
                return false;
            }
            const auto W = witt_ring(e.sym.field, t.r);
            auto acc = W.zero();
            const Int n = m.scalar < 0 ? Int(-m.scalar) : m.scalar;
            for (Int i = 0; i < n; ++i) {
                acc = W.add(acc, m.witness);
            }
            if (m.scalar < 0) {
                acc = W.neg(acc);
            }
            return acc == e.sym.witt;
        }
        if (m.witness.size() != 1 || m.witness[0] == 0 || !K.contains(m.witness[0])) {
            return false;
        }
        return naive_pow(K, m.witness[0], m.scalar) == e.sym.units[t.unit_index(m.slot)];
    }
    case MoveKind::ScaleIntoSlot:
        return m.scalar == e.coeff;
    default:
        return std::nullopt;
    }
}

} // namespace oracle

#endif
