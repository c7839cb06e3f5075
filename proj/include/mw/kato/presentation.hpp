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

#ifndef MW_KATO_PRESENTATION_HPP
#define MW_KATO_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include <mw/abgrp/finite.hpp>
#include <mw/abgrp/group.hpp>
#include <mw/core/error.hpp>
#include <mw/ff/field.hpp>
#include <mw/kato/asw.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/maps.hpp>
#include <mw/witt/ring.hpp>

namespace mw::kato {

struct Bounds {
    std::uint64_t witt_elems = 256; // q^r, or q^{|S|}
    std::uint64_t units = 15;       // q - 1
    unsigned degree = 3;            // n
};

// (W(k) (x) (k^x)^{(x)(n-1)}) / J for finite k. The tensor group has one
// generator per cyclic factor of W(k), each tensored with gamma^{(x)(n-1)}
// for a fixed primitive element gamma.
class KatoPresentation
{
public:
    KatoPresentation(const FieldWitt &W, unsigned n, const Bounds &b, bool with_relation_b)
        : m_W(W), m_n(n), m_k(W.coeff_ref())
    {
        if (n < 1) {
            throw DomainError("Kato presentation needs n >= 1");
        }
        if (n > b.degree) {
            throw BoundExceeded("degree n", n, b.degree);
        }
        if (W.cardinality() > b.witt_elems) {
            throw BoundExceeded("Witt ring size", W.cardinality(), b.witt_elems);
        }
        if (m_k->order() - 1 > b.units) {
            throw BoundExceeded("unit group size", m_k->order() - 1, b.units);
        }
        m_wstruct = witt_group_structure(W, b.witt_elems);
        build(with_relation_b);
        m_reducer = std::make_shared<abgrp::Reducer>(m_pres);
    }

    const FieldWitt &witt() const
    {
        return m_W;
    }
    unsigned degree() const
    {
        return m_n;
    }
    const abgrp::Presentation &presentation() const
    {
        return m_pres;
    }
    const abgrp::Presentation &tensor_group() const
    {
        return m_tensor;
    }
    std::size_t relation_count(char type) const
    {
        return m_counts.at(type);
    }
    std::vector<Int> invariants() const
    {
        return m_reducer->invariants();
    }

    // Coordinates of the generator <a, b_1, ..., b_{n-1}> in the tensor group.
    abgrp::Vec tensor_element(const FieldWitt::Vector &a, const std::vector<ff::Elem> &units) const
    {
        if (units.size() + 1 != m_n) {
            throw DomainError("symbol needs exactly n-1 unit slots");
        }
        Int e = 1;
        for (auto u : units) {
            if (u == 0 || !m_k->contains(u)) {
                throw DomainError("unit slot is not a unit of " + m_k->spec());
            }
            e *= m_k->log(u);
        }
        const auto c = m_wstruct.coords.at(m_W.index(a));
        abgrp::Vec v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            v[i] = Int(c[i]) * e;
        }
        return v;
    }
    // Canonical coordinates of the class in the quotient.
    abgrp::Vec class_of(const FieldWitt::Vector &a, const std::vector<ff::Elem> &units) const
    {
        return m_reducer->reduce(tensor_element(a, units));
    }
    abgrp::Vec reduce(const abgrp::Vec &v) const
    {
        return m_reducer->reduce(v);
    }

private:
    void build(bool with_relation_b)
    {
        const std::size_t t = m_wstruct.orders.size();
        abgrp::Presentation Wp = m_wstruct.presentation();
        m_tensor = Wp;
        for (unsigned i = 1; i < m_n; ++i) {
            m_tensor = abgrp::tensor(m_tensor, abgrp::cyclic(Int(m_k->order() - 1), "gamma"));
        }
        m_pres = m_tensor;
        m_counts = {{'a', 0}, {'b', 0}, {'c', 0}};
        const std::uint64_t units = m_k->order() - 1;
        auto coords = [&](const FieldWitt::Vector &x) {
            const auto c = m_wstruct.coords.at(m_W.index(x));
            return abgrp::Vec(c.begin(), c.end());
        };
        // (a) repeated unit slots: a (x) ... b ... b ... for every b.
        if (m_n >= 3) {
            const unsigned pairs = (m_n - 1) * (m_n - 2) / 2;
            for (std::size_t g = 0; g < t; ++g) {
                for (std::uint64_t e = 0; e < units; ++e) {
                    for (unsigned pr = 0; pr < pairs; ++pr) {
                        abgrp::Vec row(t, 0);
                        row[g] = Int(e) * Int(e);
                        m_pres.add_relation(row);
                        ++m_counts['a'];
                    }
                }
            }
        }
        // (b) V^i([a]) (x) a (x) b_2 ...
        if (m_n >= 2 && with_relation_b) {
            for (std::uint64_t e = 0; e < units; ++e) {
                const ff::Elem a = m_k->pow(m_k->primitive_element(), Int(e));
                for (std::size_t i = 0; i < m_W.size(); ++i) {
                    auto v = m_W.zero();
                    v[i] = a;
                    auto row = coords(v);
                    for (auto &x : row) {
                        x *= Int(e);
                    }
                    m_pres.add_relation(row);
                    ++m_counts['b'];
                }
            }
        }
        // (c) (Phi - id)(a) (x) b_1 (x) ... over generators a of W(k).
        for (std::size_t g = 0; g < t; ++g) {
            const auto x = m_W.at(m_wstruct.generators[g]);
            m_pres.add_relation(coords(m_W.sub(witt::frobenius_coords(m_W, x), x)));
            ++m_counts['c'];
        }
    }

    FieldWitt m_W;
    unsigned m_n;
    ff::FieldRef m_k;
    abgrp::FiniteStructure m_wstruct;
    abgrp::Presentation m_tensor;
    abgrp::Presentation m_pres;
    std::map<char, std::size_t> m_counts;
    std::shared_ptr<abgrp::Reducer> m_reducer;
};

// Write-once cache keyed by (field, r, n).
class PresentationCache
{
public:
    static PresentationCache &instance()
    {
        static PresentationCache c;
        return c;
    }
    std::shared_ptr<const KatoPresentation> get(const ff::FieldRef &k, unsigned r, unsigned n, const Bounds &b)
    {
        if (r < 1) {
            throw DomainError("level r must be at least 1");
        }
        const auto key = std::make_tuple(k->id(), r, n);
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard<std::mutex> lock(m_mutex);
            auto &s = m_slots[key];
            if (!s) {
                s = std::make_shared<Slot>();
            }
            slot = s;
        }
        std::call_once(slot->once, [&] {
            slot->value = std::make_shared<const KatoPresentation>(
                FieldWitt(trunc::p_typical(k->characteristic(), r), k), n, b, true);
        });
        // Bounds are re-checked so a cached large instance is not served under a smaller cap.
        if (ipow(k->order(), r) > b.witt_elems) {
            throw BoundExceeded("Witt ring size", ipow(k->order(), r), b.witt_elems);
        }
        if (k->order() - 1 > b.units) {
            throw BoundExceeded("unit group size", k->order() - 1, b.units);
        }
        if (n > b.degree) {
            throw BoundExceeded("degree n", n, b.degree);
        }
        return slot->value;
    }

private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const KatoPresentation> value;
    };
    std::mutex m_mutex;
    std::map<std::tuple<std::string, unsigned, unsigned>, std::shared_ptr<Slot>> m_slots;
};

inline std::shared_ptr<const KatoPresentation> build_presentation(const ff::FieldRef &k, unsigned r, unsigned n,
                                                                  const Bounds &b = {})
{
    return PresentationCache::instance().get(k, r, n, b);
}

inline std::vector<Int> invariants(const ff::FieldRef &k, unsigned r, unsigned n, const Bounds &b = {})
{
    return build_presentation(k, r, n, b)->invariants();
}

inline abgrp::Vec class_of(const ff::FieldRef &k, unsigned r, unsigned n, const FieldWitt::Vector &a,
                           const std::vector<ff::Elem> &units, const Bounds &b = {})
{
    return build_presentation(k, r, n, b)->class_of(a, units);
}

// Invariant factors of a direct sum.
inline std::vector<Int> direct_sum_invariants(const std::vector<std::vector<Int>> &parts)
{
    std::vector<Int> diag;
    for (const auto &p : parts) {
        diag.insert(diag.end(), p.begin(), p.end());
    }
    abgrp::Presentation g = abgrp::free_group(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        abgrp::Vec row(diag.size(), 0);
        row[i] = diag[i];
        g.relations.push_back(row);
    }
    return abgrp::smith_invariants(g);
}

struct DecmReport {
    std::vector<trunc::ProfileEntry> profile;
    std::vector<std::vector<Int>> component_invariants;
    std::vector<Int> product_invariants;
    std::vector<Int> model_invariants; // presentation built on W_S(k) directly
    bool ok = false;
};

// Product of the per-component Kato groups against a presentation built on
// the big Witt ring W_S(k) with (Phi - id) in relation (c).
inline DecmReport decm_check(const trunc::TruncationSet &S, const ff::FieldRef &k, unsigned n, const Bounds &b = {})
{
    DecmReport rep;
    rep.profile = trunc::decomposition_profile(S, k->characteristic());
    for (const auto &e : rep.profile) {
        rep.component_invariants.push_back(invariants(k, e.r, n, b));
    }
    rep.product_invariants = direct_sum_invariants(rep.component_invariants);
    const KatoPresentation model(FieldWitt(S, k), n, b, false);
    rep.model_invariants = model.invariants();
    rep.ok = rep.model_invariants == rep.product_invariants;
    return rep;
}

} // namespace mw::kato

#endif
