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

#ifndef MW_DERHAM_FORMS_HPP
#define MW_DERHAM_FORMS_HPP

#include <string>

#include <mw/derham/funfield.hpp>

namespace mw::derham {

// f ds for the separating element s of the owning field.
struct Diff1 {
    FunField::Elem coeff;

    bool operator==(const Diff1 &o) const
    {
        return coeff == o.coeff;
    }
};

inline FunField base_field(const FunField &L)
{
    return FunField::rational(L.base().constants_ref(), L.base().var());
}

inline Diff1 zero_form(const FunField &F)
{
    return {F.zero()};
}
inline Diff1 add(const FunField &F, const Diff1 &a, const Diff1 &b)
{
    return {F.add(a.coeff, b.coeff)};
}
inline Diff1 sub(const FunField &F, const Diff1 &a, const Diff1 &b)
{
    return {F.sub(a.coeff, b.coeff)};
}
inline Diff1 scale(const FunField &F, const FunField::Elem &x, const Diff1 &w)
{
    return {F.mul(x, w.coeff)};
}
inline bool is_zero(const FunField &F, const Diff1 &w)
{
    return F.is_zero(w.coeff);
}

inline Diff1 d(const FunField &F, const FunField::Elem &x)
{
    return {F.derivative(x)};
}

inline Diff1 dlog(const FunField &F, const FunField::Elem &x)
{
    if (F.is_zero(x)) {
        throw DomainError("dlog of zero");
    }
    return {F.div(F.derivative(x), x)};
}

inline std::string to_string(const FunField &F, const Diff1 &w)
{
    return "(" + F.to_string(w.coeff) + ") d" + F.basis_name();
}

namespace detail {

inline void require_rational(const FunField &F, const char *what)
{
    if (F.kind() != LayerKind::None) {
        throw DomainError(std::string(what) + " is implemented for rational function fields only, not " + F.spec());
    }
}

} // namespace detail

// C(sum f_i^p t^i dt) = f_{p-1} dt.
inline Diff1 cartier(const FunField &F, const Diff1 &w)
{
    detail::require_rational(F, "the Cartier operator");
    const auto c = F.base().pth_components(w.coeff[0]);
    return {{c.back()}};
}

inline bool is_exact(const FunField &F, const Diff1 &w)
{
    return is_zero(F, cartier(F, w));
}

// The inverse Cartier operator, F(a dlog b) = a^p dlog b; on f dt = (f t) dlog t
// this is f^p t^{p-1} dt. Well defined modulo exact forms.
inline Diff1 inverse_cartier(const FunField &F, const Diff1 &w)
{
    detail::require_rational(F, "the inverse Cartier operator");
    const auto &K = F.base();
    const auto p = static_cast<std::int64_t>(K.characteristic());
    return {{K.mul(K.frobenius(w.coeff[0]), K.pow(K.gen(), p - 1))}};
}

// Canonical representative of w modulo exact forms: C(w)^p t^{p-1} dt.
inline Diff1 exact_normal_form(const FunField &F, const Diff1 &w)
{
    return inverse_cartier(F, cartier(F, w));
}

struct WpClass {
    Diff1 representative; // F(w) - w
    Diff1 normal_form;    // its representative modulo exact forms
};

inline WpClass wp_form(const FunField &F, const Diff1 &w)
{
    const Diff1 rep = sub(F, inverse_cartier(F, w), w);
    return {rep, exact_normal_form(F, rep)};
}

// Norm and trace of L over its base, through the multiplication matrix.
inline Rat norm_ff(const FunField &L, const FunField::Elem &x)
{
    if (L.kind() == LayerKind::None) {
        return x[0];
    }
    return linalg::det(L.base(), L.mult_matrix(x));
}

inline Rat trace_ff(const FunField &L, const FunField::Elem &x)
{
    const auto &K = L.base();
    if (L.kind() == LayerKind::None) {
        return x[0];
    }
    const auto M = L.mult_matrix(x);
    Rat s = K.zero();
    for (std::size_t i = 0; i < M.size(); ++i) {
        s = K.add(s, M[i][i]);
    }
    return s;
}

// Image of a form of the base in L. dt dies in an inseparable layer.
inline Diff1 restrict_form(const FunField &L, const Diff1 &eta)
{
    if (L.kind() == LayerKind::Inseparable) {
        return zero_form(L);
    }
    return {L.from_base(eta.coeff[0])};
}

// Separable layer: Tr(f dt) = Tr(f) dt.
inline Diff1 trace_form_sep(const FunField &L, const Diff1 &w)
{
    if (L.kind() != LayerKind::Separable) {
        throw DomainError("trace_form_sep needs a separable layer");
    }
    return {{trace_ff(L, w.coeff)}};
}

// Layer y^p = a: Tr(sum g_i y^i dy) = g_{p-1} da.
inline Diff1 trace_form_insep(const FunField &L, const Diff1 &w)
{
    if (L.kind() != LayerKind::Inseparable) {
        throw DomainError("trace_form_insep needs a purely inseparable layer of degree p");
    }
    const auto &K = L.base();
    return {{K.mul(w.coeff.back(), K.derivative(L.radicand()))}};
}

inline Diff1 trace_form(const FunField &L, const Diff1 &w)
{
    switch (L.kind()) {
    case LayerKind::Separable:
        return trace_form_sep(L, w);
    case LayerKind::Inseparable:
        return trace_form_insep(L, w);
    case LayerKind::None:
        break;
    }
    return w;
}

struct NtrReport {
    Diff1 lhs; // Tr(dlog beta)
    Diff1 rhs; // dlog N(beta)
    bool ok;
};

inline NtrReport verify_ntr(const FunField &L, const FunField::Elem &beta)
{
    if (L.is_zero(beta)) {
        throw DomainError("verify_ntr needs a nonzero element");
    }
    const FunField K = base_field(L);
    NtrReport r{trace_form(L, dlog(L, beta)), dlog(K, {norm_ff(L, beta)}), false};
    r.ok = r.lhs == r.rhs;
    return r;
}

} // namespace mw::derham

#endif
