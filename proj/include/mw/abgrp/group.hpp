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

#ifndef MW_ABGRP_GROUP_HPP
#define MW_ABGRP_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <mw/core/bigint.hpp>
#include <mw/core/error.hpp>

namespace mw::abgrp {

using Vec = std::vector<Int>;
using Matrix = std::vector<Vec>; // rows

// Z^generators modulo the row span of relations.
struct Presentation {
    std::vector<std::string> generators;
    Matrix relations;

    std::size_t rank() const
    {
        return generators.size();
    }
    void add_relation(Vec row)
    {
        if (row.size() != generators.size()) {
            throw DomainError("relation length does not match generator count");
        }
        relations.push_back(std::move(row));
    }
};

inline Presentation free_group(std::size_t n, const std::string &prefix = "g")
{
    Presentation g;
    for (std::size_t i = 0; i < n; ++i) {
        g.generators.push_back(prefix + std::to_string(i));
    }
    return g;
}

inline Presentation cyclic(const Int &m, const std::string &name = "g")
{
    Presentation g{{name}, {}};
    if (m != 0) {
        g.relations.push_back({m});
    }
    return g;
}

// U * A * V = diag. Only V is kept; it is what membership needs.
struct Smith {
    std::vector<Int> diag; // one entry per generator, >= 0, d_0 | d_1 | ... with zeros last
    Matrix V;              // rank x rank, unimodular
};

namespace detail {

inline void col_op(Matrix &A, Matrix &V, std::size_t dst, std::size_t src, const Int &q)
{
    // column dst -= q * column src
    for (auto &row : A) {
        row[dst] -= q * row[src];
    }
    for (auto &row : V) {
        row[dst] -= q * row[src];
    }
}

inline void col_swap(Matrix &A, Matrix &V, std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (auto &row : A) {
        std::swap(row[a], row[b]);
    }
    for (auto &row : V) {
        std::swap(row[a], row[b]);
    }
}

inline void row_op(Matrix &A, std::size_t dst, std::size_t src, const Int &q)
{
    for (std::size_t j = 0; j < A[dst].size(); ++j) {
        A[dst][j] -= q * A[src][j];
    }
}

// Truncating division is fine: remainders only need to shrink in absolute value.
inline Int quot(const Int &a, const Int &b)
{
    return a / b;
}

} // namespace detail

inline Smith smith(const Presentation &G)
{
    const std::size_t n = G.rank();
    Matrix A;
    for (const auto &r : G.relations) {
        if (r.size() != n) {
            throw DomainError("relation length does not match generator count");
        }
        if (std::any_of(r.begin(), r.end(), [](const Int &x) { return x != 0; })) {
            A.push_back(r);
        }
    }
    const std::size_t m = A.size();
    Matrix V(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        V[i][i] = 1;
    }
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // Pivot: least nonzero absolute value in the remaining block.
            std::size_t pi = m, pj = n;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (A[i][j] != 0 && (best == 0 || abs(A[i][j]) < best)) {
                        best = abs(A[i][j]);
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == m) {
                break;
            }
            std::swap(A[t], A[pi]);
            detail::col_swap(A, V, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] != 0) {
                    detail::row_op(A, i, t, detail::quot(A[i][t], A[t][t]));
                    clean = clean && A[i][t] == 0;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] != 0) {
                    detail::col_op(A, V, j, t, detail::quot(A[t][j], A[t][t]));
                    clean = clean && A[t][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (A[i][j] % A[t][t] != 0) {
                        detail::row_op(A, t, i, Int(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (t >= m || A[t][t] == 0) {
            break;
        }
        if (A[t][t] < 0) {
            for (auto &row : A) {
                row[t] = -row[t];
            }
            for (auto &row : V) {
                row[t] = -row[t];
            }
        }
    }
    Smith s;
    s.diag.assign(n, 0);
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        s.diag[i] = A[i][i];
    }
    s.V = std::move(V);
    return s;
}

// Invariant factors, ones dropped, free part as trailing zeros.
inline std::vector<Int> invariants(const Smith &s)
{
    std::vector<Int> out;
    for (const auto &d : s.diag) {
        if (d != 1) {
            out.push_back(d);
        }
    }
    return out;
}

inline std::vector<Int> smith_invariants(const Presentation &G)
{
    return invariants(smith(G));
}

// Order of the group, or 0 when infinite.
inline Int group_order(const Presentation &G)
{
    Int n = 1;
    for (const auto &d : smith_invariants(G)) {
        if (d == 0) {
            return 0;
        }
        n *= d;
    }
    return n;
}

// Canonical coordinates of group elements through a fixed Smith transform.
class Reducer
{
public:
    explicit Reducer(const Presentation &G) : m_rank(G.rank()), m_smith(smith(G)) {}

    std::size_t rank() const
    {
        return m_rank;
    }
    const Smith &smith_form() const
    {
        return m_smith;
    }
    std::vector<Int> invariants() const
    {
        return abgrp::invariants(m_smith);
    }
    // Coordinates in prod Z/d_j over the columns with d_j != 1.
    Vec reduce(const Vec &v) const
    {
        check(v);
        Vec out;
        for (std::size_t j = 0; j < m_rank; ++j) {
            const Int &d = m_smith.diag[j];
            if (d == 1) {
                continue;
            }
            Int w = 0;
            for (std::size_t i = 0; i < m_rank; ++i) {
                if (v[i] != 0) {
                    w += v[i] * m_smith.V[i][j];
                }
            }
            out.push_back(d == 0 ? w : mod_floor(w, d));
        }
        return out;
    }
    bool is_zero(const Vec &v) const
    {
        const Vec w = reduce(v);
        return std::all_of(w.begin(), w.end(), [](const Int &x) { return x == 0; });
    }
    // 0 for elements of infinite order.
    Int order(const Vec &v) const
    {
        const Vec w = reduce(v);
        Int ord = 1;
        std::size_t k = 0;
        for (std::size_t j = 0; j < m_rank; ++j) {
            const Int &d = m_smith.diag[j];
            if (d == 1) {
                continue;
            }
            const Int &x = w[k++];
            if (x == 0) {
                continue;
            }
            if (d == 0) {
                return 0;
            }
            const Int o = d / mw::gcd(x, d);
            ord = ord / mw::gcd(ord, o) * o;
        }
        return ord;
    }

private:
    void check(const Vec &v) const
    {
        if (v.size() != m_rank) {
            throw DomainError("element length does not match generator count");
        }
    }

    std::size_t m_rank;
    Smith m_smith;
};

inline bool is_zero_in(const Presentation &G, const Vec &v)
{
    return Reducer(G).is_zero(v);
}

inline Int element_order(const Presentation &G, const Vec &v)
{
    return Reducer(G).order(v);
}

// Generators g_i (x) h_j, index i * |H| + j.
inline Presentation tensor(const Presentation &G, const Presentation &H)
{
    const std::size_t a = G.rank(), b = H.rank();
    Presentation T;
    for (const auto &g : G.generators) {
        for (const auto &h : H.generators) {
            T.generators.push_back(g + "*" + h);
        }
    }
    for (const auto &r : G.relations) {
        for (std::size_t j = 0; j < b; ++j) {
            Vec row(a * b, 0);
            for (std::size_t i = 0; i < a; ++i) {
                row[i * b + j] = r[i];
            }
            T.relations.push_back(std::move(row));
        }
    }
    for (const auto &r : H.relations) {
        for (std::size_t i = 0; i < a; ++i) {
            Vec row(a * b, 0);
            for (std::size_t j = 0; j < b; ++j) {
                row[i * b + j] = r[j];
            }
            T.relations.push_back(std::move(row));
        }
    }
    return T;
}

// Elementary tensor of coordinate vectors, in the layout of tensor().
inline Vec tensor_vec(const Vec &x, const Vec &y)
{
    Vec out(x.size() * y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i * y.size() + j] = x[i] * y[j];
        }
    }
    return out;
}

inline Presentation quotient_by(Presentation G, const std::vector<Vec> &extra)
{
    for (const auto &r : extra) {
        G.add_relation(r);
    }
    return G;
}

// Cokernel of the map sending generator i of G to images[i] in H.
inline Presentation cokernel(const Presentation &G, const Presentation &H, const std::vector<Vec> &images)
{
    if (images.size() != G.rank()) {
        throw DomainError("cokernel: one image per source generator required");
    }
    Reducer red(H);
    for (const auto &r : G.relations) {
        Vec img(H.rank(), 0);
        for (std::size_t i = 0; i < G.rank(); ++i) {
            if (images[i].size() != H.rank()) {
                throw DomainError("cokernel: image length mismatch");
            }
            for (std::size_t j = 0; j < H.rank(); ++j) {
                img[j] += r[i] * images[i][j];
            }
        }
        if (!red.is_zero(img)) {
            throw DomainError("cokernel: map does not respect relations");
        }
    }
    return quotient_by(H, images);
}

} // namespace mw::abgrp

#endif
