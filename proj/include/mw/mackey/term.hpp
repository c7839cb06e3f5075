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

#ifndef MW_MACKEY_TERM_HPP
#define MW_MACKEY_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>
#include <mw/ff/field.hpp>
#include <mw/ff/maps.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/maps.hpp>
#include <mw/witt/ring.hpp>

namespace mw::mackey {

using ff::Elem;
using ff::Field;
using ff::FieldRef;

// {a, b_1, ..., b_{n-1}}_{K/k}. With r = 0 there is no Witt slot and all n
// slots are units.
struct Symbol {
    FieldRef field;
    std::vector<Elem> witt;  // length r
    std::vector<Elem> units; // length n - 1, or n when r = 0
};

struct Entry {
    Int coeff;
    Symbol sym;
};

// Integer combination of symbols over the base field k, optionally modulo m.
struct Term {
    FieldRef base;
    unsigned r = 0;
    unsigned n = 1;
    Int modulus = 0;
    std::vector<Entry> entries;

    bool empty() const
    {
        return entries.empty();
    }
    std::size_t unit_slots() const
    {
        return r == 0 ? n : n - 1;
    }
    std::size_t slot_count() const
    {
        return n;
    }
    bool is_witt_slot(std::size_t slot) const
    {
        return r > 0 && slot == 0;
    }
    std::size_t unit_index(std::size_t slot) const
    {
        return r == 0 ? slot : slot - 1;
    }
};

inline witt::FieldWitt witt_ring(const FieldRef &K, unsigned r)
{
    return witt::FieldWitt(trunc::p_typical(K->characteristic(), r), K);
}

struct MoveError : Error {
    using Error::Error;
};

inline void validate_symbol(const Term &t, const Symbol &s)
{
    if (!s.field || !t.base->is_subtower_of(*s.field)) {
        throw MoveError("symbol field does not contain the base field");
    }
    if (s.witt.size() != t.r) {
        throw MoveError("Witt slot has wrong length");
    }
    if (s.units.size() != t.unit_slots()) {
        throw MoveError("wrong number of unit slots");
    }
    for (auto x : s.witt) {
        if (!s.field->contains(x)) {
            throw MoveError("Witt coordinate outside symbol field");
        }
    }
    for (auto u : s.units) {
        if (u == 0 || !s.field->contains(u)) {
            throw MoveError("unit slot is not a unit of the symbol field");
        }
    }
}

inline void validate_term(const Term &t)
{
    if (!t.base) {
        throw MoveError("term has no base field");
    }
    if (t.r == 0 && t.n == 0) {
        // {}_{K/k}: the degree functor, no slots.
    } else if (t.r > 0 && t.n < 1) {
        throw MoveError("a term with a Witt slot needs n >= 1");
    }
    if (t.modulus < 0) {
        throw MoveError("negative modulus");
    }
    for (const auto &e : t.entries) {
        validate_symbol(t, e.sym);
    }
}

inline bool same_symbol(const Symbol &a, const Symbol &b)
{
    return a.field->same_as(*b.field) && a.witt == b.witt && a.units == b.units;
}

} // namespace mw::mackey

#endif
