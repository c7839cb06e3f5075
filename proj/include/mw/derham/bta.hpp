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

#ifndef MW_DERHAM_BTA_HPP
#define MW_DERHAM_BTA_HPP

#include <vector>

#include <mw/derham/forms.hpp>

namespace mw::derham {

struct HypothesisViolation : DomainError {
    HypothesisViolation(const std::string &what, std::size_t degree) : DomainError(what), degree(degree) {}
    std::size_t degree;
};

// beta = unit * prod factors(theta), factors over k given as polynomials in T.
struct FactoredElement {
    Rat unit;
    std::vector<KPoly> factors;
};

// xi dlog y with xi in K, y in k^x.
struct XiDlogY {
    FunField::Elem xi;
    Rat y;
};
// x dlog eta with x in k, eta in K^x.
struct XDlogEta {
    Rat x;
    FunField::Elem eta;
};

struct BtaResult {
    std::vector<XiDlogY> xi_terms;
    std::vector<XDlogEta> x_terms;
    FunField::Elem remainder; // the exact part is d(remainder)
};

inline FunField::Elem evaluate_factored(const FunField &K, const FactoredElement &b)
{
    auto out = K.from_base(b.unit);
    for (const auto &f : b.factors) {
        out = K.mul(out, K.from_poly(f));
    }
    return out;
}

// alpha dlog beta over K = k(theta) of degree p, as a sum of the two term
// shapes plus an exact form, one linear factor theta - b at a time.
inline BtaResult bta_rewrite(const FunField &K, const FunField::Elem &alpha, FactoredElement beta)
{
    const auto &k = K.base();
    if (K.kind() == LayerKind::None || K.degree() != K.characteristic()) {
        throw DomainError("bta_rewrite needs an extension of degree p");
    }
    if (k.is_zero(beta.unit)) {
        throw DomainError("bta_rewrite: beta must be nonzero");
    }
    for (auto &f : beta.factors) {
        poly::trim(k, f);
        if (f.size() < 2) {
            throw DomainError("bta_rewrite: constant factor");
        }
        if (f.size() > 2) {
            throw HypothesisViolation("factor of degree " + std::to_string(f.size() - 1) +
                                          " over k: only linear factors are rewritten",
                                      f.size() - 1);
        }
        if (!k.eq(f[1], k.one())) {
            beta.unit = k.mul(beta.unit, f[1]);
            f = poly::scale(k, f, k.inv(f[1]));
        }
    }
    BtaResult out{{}, {}, K.zero()};
    if (K.is_zero(alpha)) {
        return out;
    }
    out.xi_terms.push_back({alpha, beta.unit});
    const auto p = K.degree();
    for (const auto &f : beta.factors) {
        // tau = theta - b with b = -f[0]; alpha = sum_j a_j tau^j, a_j in k.
        const Rat b = k.neg(f[0]);
        const FunField::Elem tau = K.from_poly(f);
        KPoly shifted; // alpha(tau + b) as a polynomial in tau
        const KPoly tau_plus_b{b, k.one()};
        for (std::size_t i = alpha.size(); i-- > 0;) {
            shifted = poly::add(k, poly::mul(k, shifted, tau_plus_b), poly::constant(k, alpha[i]));
        }
        if (shifted.size() > p) {
            throw Error("bta_rewrite: expansion exceeds the power basis");
        }
        shifted.resize(p, k.zero());
        if (!k.is_zero(shifted[0])) {
            out.x_terms.push_back({shifted[0], tau});
        }
        // a tau^j dlog tau = (1/j) d(a tau^j) - (1/j) a tau^j dlog a
        for (std::size_t j = 1; j < p; ++j) {
            const Rat &a = shifted[j];
            if (k.is_zero(a)) {
                continue;
            }
            const Rat inv_j = k.inv(k.from_int(static_cast<std::int64_t>(j)));
            const auto a_tau_j = K.mul(K.from_base(a), K.pow(tau, static_cast<std::int64_t>(j)));
            out.remainder = K.add(out.remainder, K.scale(inv_j, a_tau_j));
            out.xi_terms.push_back({K.neg(K.scale(inv_j, a_tau_j)), a});
        }
    }
    return out;
}

// Sum of the output terms plus d(remainder).
inline Diff1 bta_replay(const FunField &K, const BtaResult &r)
{
    Diff1 acc = d(K, r.remainder);
    for (const auto &t : r.xi_terms) {
        acc = add(K, acc, scale(K, t.xi, dlog(K, K.from_base(t.y))));
    }
    for (const auto &t : r.x_terms) {
        acc = add(K, acc, scale(K, K.from_base(t.x), dlog(K, t.eta)));
    }
    return acc;
}

} // namespace mw::derham

#endif
