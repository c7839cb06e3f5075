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

#ifndef MW_DERHAM_VALIDATE_HPP
#define MW_DERHAM_VALIDATE_HPP

#include <mw/derham/forms.hpp>

// Property checks for the trace on 1-forms of a single layer L/K.
namespace mw::derham {

inline Diff1 random_form(const FunField &F, Rng &rng, unsigned height)
{
    return {F.random(rng, height)};
}

// Tr(c w1 + w2) = c Tr(w1) + Tr(w2) for c in K, and Tr(x res(eta)) = Tr(x) eta.
inline bool check_trace_linearity(const FunField &L, Rng &rng, unsigned height)
{
    const FunField K = base_field(L);
    const Rat c = L.base().random(rng, height);
    const Diff1 w1 = random_form(L, rng, height), w2 = random_form(L, rng, height);
    const Diff1 lhs = trace_form(L, add(L, scale(L, L.from_base(c), w1), w2));
    const Diff1 rhs = add(K, scale(K, {c}, trace_form(L, w1)), trace_form(L, w2));
    const auto x = L.random(rng, height);
    const Diff1 eta = random_form(K, rng, height);
    const Diff1 pf_l = trace_form(L, scale(L, x, restrict_form(L, eta)));
    const Diff1 pf_r = scale(K, {trace_ff(L, x)}, eta);
    return lhs == rhs && pf_l == pf_r;
}

// Tr(res(eta)) = [L:K] eta.
inline bool check_trace_of_restriction(const FunField &L, Rng &rng, unsigned height)
{
    const FunField K = base_field(L);
    const Diff1 eta = random_form(K, rng, height);
    const auto deg = static_cast<std::int64_t>(L.degree());
    return trace_form(L, restrict_form(L, eta)) == scale(K, K.from_int(deg), eta);
}

// Tr(dx) = d(Tr x).
inline bool check_trace_d(const FunField &L, Rng &rng, unsigned height)
{
    const FunField K = base_field(L);
    const auto x = L.random(rng, height);
    return trace_form(L, d(L, x)) == d(K, {trace_ff(L, x)});
}

inline bool check_ntr(const FunField &L, Rng &rng, unsigned height)
{
    return verify_ntr(L, L.random_unit(rng, height)).ok;
}

// h with coefficients replaced by their p-th roots: h(v^p) = hroot(v)^p.
inline FPoly coefficient_pth_root(const Field &k, const FPoly &h)
{
    FPoly out;
    for (auto c : h) {
        out.push_back(k.pth_root(c));
    }
    return out;
}

// Transitivity through both orders of a mixed tower. L = F_q(u), K = F_q(s)
// with s = h(u^p). Route A: L / F_q(u^p) inseparable, then separable down
// to K. Route B: L / F_q(w), w = hroot(u), separable, then w^p = s.
// Returns both traces of w = f du, as coefficients of ds.
inline std::pair<Rat, Rat> mixed_tower_traces(const FieldRef &k, const FPoly &h, const Rat &f)
{
    const std::uint64_t p = k->characteristic();
    const RatField K(k, "s");
    auto lift = [&](const RatField &R, const FPoly &g) {
        KPoly out;
        for (auto c : g) {
            out.push_back(R.constant(c));
        }
        return out;
    };
    auto pure = [&](const RatField &R) {
        KPoly g(p + 1, R.zero());
        g[0] = R.neg(R.gen());
        g[p] = R.one();
        return g;
    };

    // Route A
    const RatField Mv(k, "v");
    const FunField LA = FunField::extension(Mv, pure(Mv), "u");
    const Diff1 wA{LA.evaluate(f, LA.gen())};
    const Rat gA = trace_form_insep(LA, wA).coeff[0]; // coefficient of dv
    KPoly hs = lift(K, h);
    hs[0] = K.sub(hs[0], K.gen());
    const FunField MK = FunField::extension(K, hs, "v");
    const auto dv_ds = MK.derivative(MK.gen());
    const Rat trA = trace_form_sep(MK, {MK.mul(MK.evaluate(gA, MK.gen()), dv_ds)}).coeff[0];

    // Route B
    const RatField Mw(k, "w");
    KPoly hw = lift(Mw, coefficient_pth_root(*k, h));
    hw[0] = Mw.sub(hw[0], Mw.gen());
    const FunField LB = FunField::extension(Mw, hw, "u");
    const auto du_dw = LB.derivative(LB.gen());
    const Rat gB = trace_form_sep(LB, {LB.mul(LB.evaluate(f, LB.gen()), du_dw)}).coeff[0]; // of dw
    const FunField MpK = FunField::extension(K, pure(K), "w");
    const Rat trB = trace_form_insep(MpK, {MpK.evaluate(gB, MpK.gen())}).coeff[0];
    return {trA, trB};
}

} // namespace mw::derham

#endif
