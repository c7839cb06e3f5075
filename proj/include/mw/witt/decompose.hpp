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

#ifndef MW_WITT_DECOMPOSE_HPP
#define MW_WITT_DECOMPOSE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <mw/core/error.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/maps.hpp>
#include <mw/witt/ring.hpp>

namespace mw::witt {

// W_S(k) -> prod_m W_{r_m}(k), x -> (R(F_m x))_m for k of characteristic p.
class Decomposition
{
public:
    static constexpr std::uint64_t default_bound = 65536;

    explicit Decomposition(const FieldWitt &W) : m_W(W), m_p(W.coeff().characteristic())
    {
        for (const auto &e : trunc::decomposition_profile(W.tset(), m_p)) {
            m_profile.push_back(e);
            m_parts.emplace_back(trunc::p_typical(m_p, e.r), W.coeff_ref());
        }
    }

    const FieldWitt &source() const
    {
        return m_W;
    }
    const std::vector<trunc::ProfileEntry> &profile() const
    {
        return m_profile;
    }
    const std::vector<FieldWitt> &parts() const
    {
        return m_parts;
    }

    std::vector<FieldWitt::Vector> decompose(const FieldWitt::Vector &x) const
    {
        std::vector<FieldWitt::Vector> out;
        for (std::size_t i = 0; i < m_profile.size(); ++i) {
            const auto m = m_profile[i].m;
            const auto Sm = *trunc::quotient(m_W.tset(), m);
            const FieldWitt Wm(Sm, m_W.coeff_ref());
            const auto y = m == 1 ? x : frobenius_n(m_W, m, x);
            out.push_back(restrict_to(Wm, m_parts[i].tset(), y));
        }
        return out;
    }

    // Brute-force inverse over the whole carrier. Returns false if the map
    // is not a bijection.
    bool build_inverse(std::uint64_t bound = default_bound)
    {
        const auto n = m_W.cardinality();
        if (n > bound) {
            throw BoundExceeded("decomposition inverse table", n, bound);
        }
        m_inverse.assign(n, UINT64_MAX);
        bool bijective = true;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto key = tuple_index(decompose(m_W.at(i)));
            if (m_inverse[key] != UINT64_MAX) {
                bijective = false;
            }
            m_inverse[key] = i;
        }
        m_bijective = bijective;
        return bijective;
    }

    FieldWitt::Vector recombine(const std::vector<FieldWitt::Vector> &parts) const
    {
        if (m_inverse.empty()) {
            throw Error("recombine needs build_inverse() first");
        }
        const auto idx = m_inverse.at(tuple_index(parts));
        if (idx == UINT64_MAX) {
            throw DomainError("tuple has no preimage");
        }
        return m_W.at(idx);
    }

    std::uint64_t tuple_index(const std::vector<FieldWitt::Vector> &parts) const
    {
        if (parts.size() != m_parts.size()) {
            throw DomainError("wrong number of decomposition components");
        }
        std::uint64_t idx = 0;
        for (std::size_t i = parts.size(); i-- > 0;) {
            idx = idx * m_parts[i].cardinality() + m_parts[i].index(parts[i]);
        }
        return idx;
    }

private:
    FieldWitt m_W;
    std::uint64_t m_p;
    std::vector<trunc::ProfileEntry> m_profile;
    std::vector<FieldWitt> m_parts;
    std::vector<std::uint64_t> m_inverse;
    bool m_bijective = false;
};

} // namespace mw::witt

#endif
