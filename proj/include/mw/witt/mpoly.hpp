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

#ifndef MW_WITT_MPOLY_HPP
#define MW_WITT_MPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>

namespace mw::witt {

using Exps = std::vector<std::uint32_t>;

// Sparse polynomial with integer coefficients in a fixed number of variables.
class MPoly
{
public:
    explicit MPoly(std::size_t nvars = 0) : m_n(nvars) {}

    static MPoly constant(std::size_t nvars, const Int &c)
    {
        MPoly r(nvars);
        if (c != 0) {
            r.m_terms.emplace(Exps(nvars, 0), c);
        }
        return r;
    }
    static MPoly var(std::size_t nvars, std::size_t i, std::uint32_t e = 1)
    {
        MPoly r(nvars);
        Exps x(nvars, 0);
        x[i] = e;
        r.m_terms.emplace(std::move(x), Int(1));
        return r;
    }

    std::size_t nvars() const
    {
        return m_n;
    }
    const std::map<Exps, Int> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    MPoly &operator+=(const MPoly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            accumulate(e, c);
        }
        return *this;
    }
    MPoly &operator-=(const MPoly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            accumulate(e, -c);
        }
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly &b)
    {
        return a += b;
    }
    friend MPoly operator-(MPoly a, const MPoly &b)
    {
        return a -= b;
    }
    friend MPoly operator*(const MPoly &a, const MPoly &b)
    {
        MPoly r(a.m_n);
        Exps e(a.m_n);
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }
    MPoly scaled(const Int &c) const
    {
        MPoly r(m_n);
        if (c == 0) {
            return r;
        }
        for (const auto &[e, x] : m_terms) {
            r.m_terms.emplace(e, x * c);
        }
        return r;
    }
    MPoly pow(std::uint64_t k) const
    {
        MPoly r = constant(m_n, 1), b = *this;
        while (k) {
            if (k & 1u) {
                r = r * b;
            }
            k >>= 1;
            if (k) {
                b = b * b;
            }
        }
        return r;
    }
    // Exact division; a nonzero remainder means the polynomial is not integral.
    MPoly divided_exactly(const Int &d) const
    {
        MPoly r(m_n);
        for (const auto &[e, c] : m_terms) {
            if (c % d != 0) {
                throw Error("integrality failure: coefficient " + to_string(c) + " not divisible by " + to_string(d));
            }
            r.m_terms.emplace(e, c / d);
        }
        return r;
    }
    template <class Ring>
    typename Ring::Elem eval(const Ring &R, const std::vector<typename Ring::Elem> &x) const
    {
        auto acc = R.zero();
        for (const auto &[e, c] : m_terms) {
            auto t = R.from_int(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i]) {
                    t = R.mul(t, R.pow(x[i], Int(e[i])));
                }
            }
            acc = R.add(acc, t);
        }
        return acc;
    }

private:
    void accumulate(const Exps &e, const Int &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, fresh] = m_terms.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    std::size_t m_n;
    std::map<Exps, Int> m_terms;
};

} // namespace mw::witt

#endif
