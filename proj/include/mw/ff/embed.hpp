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

#ifndef MW_FF_EMBED_HPP
#define MW_FF_EMBED_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <mw/ff/factor.hpp>
#include <mw/ff/field.hpp>

namespace mw::ff {

// Field homomorphism fixed by the images of the source layer generators.
class Embedding
{
public:
    Embedding(FieldRef source, FieldRef target, std::vector<Elem> images)
        : m_src(std::move(source)), m_dst(std::move(target)), m_images(std::move(images))
    {
        if (m_src->characteristic() != m_dst->characteristic()) {
            throw DomainError("embedding between fields of different characteristic");
        }
        if (m_images.size() != m_src->layer_count()) {
            throw DomainError("embedding needs one image per layer");
        }
        for (FieldRef cur = m_src; cur; cur = cur->base()) {
            m_chain.insert(m_chain.begin(), cur);
        }
        m_identity = m_src->is_subtower_of(*m_dst);
        for (std::size_t i = 0; m_identity && i < m_images.size(); ++i) {
            m_identity = m_images[i] == m_chain[i + 1]->generator();
        }
    }

    static Embedding inclusion(const FieldRef &source, const FieldRef &target)
    {
        if (!source->is_subtower_of(*target)) {
            throw DomainError(source->spec() + " is not a subtower of " + target->spec());
        }
        std::vector<Elem> imgs;
        for (FieldRef cur = source; cur->base(); cur = cur->base()) {
            imgs.insert(imgs.begin(), cur->generator());
        }
        return {source, target, std::move(imgs)};
    }

    const FieldRef &source() const
    {
        return m_src;
    }
    const FieldRef &target() const
    {
        return m_dst;
    }
    const std::vector<Elem> &images() const
    {
        return m_images;
    }
    bool is_identity_on_codes() const
    {
        return m_identity;
    }

    Elem operator()(Elem a) const
    {
        if (!m_src->contains(a)) {
            throw DomainError("element outside embedding source");
        }
        if (m_identity) {
            return a;
        }
        return apply(m_chain.size() - 1, a);
    }

    // Restriction to a prefix subtower of the source.
    Embedding restrict_to(const FieldRef &sub) const
    {
        if (!sub->is_subtower_of(*m_src)) {
            throw DomainError("restriction to a non-subtower");
        }
        std::vector<Elem> imgs(m_images.begin(), m_images.begin() + static_cast<std::ptrdiff_t>(sub->layer_count()));
        return {sub, m_dst, std::move(imgs)};
    }

private:
    Elem apply(std::size_t level, Elem a) const
    {
        if (level == 0) {
            return a;
        }
        const Field &F = *m_chain[level];
        const Field &T = *m_dst;
        const auto c = F.coords(a);
        Elem r = 0;
        for (std::size_t j = c.size(); j-- > 0;) {
            r = T.add(T.mul(r, m_images[level - 1]), apply(level - 1, c[j]));
        }
        return r;
    }

    FieldRef m_src;
    FieldRef m_dst;
    std::vector<Elem> m_images;
    std::vector<FieldRef> m_chain;
    bool m_identity = false;
};

inline FPoly map_poly(const Embedding &e, const FPoly &a)
{
    FPoly out;
    out.reserve(a.size());
    for (auto c : a) {
        out.push_back(e(c));
    }
    return out;
}

// Embedding of source into target choosing, layer by layer, the least root.
inline Embedding find_embedding(const FieldRef &source, const FieldRef &target)
{
    if (target->degree() % source->degree() != 0) {
        throw DomainError(source->spec() + " does not embed in " + target->spec());
    }
    std::vector<FieldRef> chain;
    for (FieldRef cur = source; cur; cur = cur->base()) {
        chain.insert(chain.begin(), cur);
    }
    std::vector<Elem> imgs;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        Embedding partial(chain[i - 1], target, imgs);
        const auto rts = roots(*target, map_poly(partial, chain[i]->modulus()));
        if (rts.empty()) {
            throw DomainError("layer polynomial has no root in " + target->spec());
        }
        imgs.push_back(rts.front());
    }
    return {source, target, std::move(imgs)};
}

struct TensorComponent {
    FieldRef field;  // composite L'_i, a tower extending K'
    Embedding from_l; // L -> L'_i
    unsigned multiplicity;
};

// Decomposes L (x)_K K' into fields. K must be a subtower of both.
inline std::vector<TensorComponent> tensor_decompose(const FieldRef &L, const FieldRef &Kp, const FieldRef &K)
{
    if (!K->is_subtower_of(*L) || !K->is_subtower_of(*Kp)) {
        throw DomainError("tensor_decompose: " + K->spec() + " is not a common subtower");
    }
    std::vector<FieldRef> chain;
    for (FieldRef cur = L; cur->layer_count() > K->layer_count(); cur = cur->base()) {
        chain.insert(chain.begin(), cur);
    }
    struct Partial {
        FieldRef field;
        std::vector<Elem> images;
    };
    std::vector<Elem> base_imgs = Embedding::inclusion(K, Kp).images();
    std::vector<Partial> comps{{Kp, base_imgs}};
    FieldRef src = K;
    for (const auto &layer : chain) {
        std::vector<Partial> next;
        for (auto &c : comps) {
            Embedding partial(src, c.field, c.images);
            const auto fz = factor_poly(*c.field, map_poly(partial, layer->modulus()));
            for (const auto &fc : fz.factors) {
                if (fc.multiplicity != 1) {
                    throw Error("inseparable layer in a finite field tower");
                }
                auto imgs = c.images;
                if (fc.poly.size() == 2) {
                    imgs.push_back(c.field->neg(fc.poly[0]));
                    next.push_back({c.field, std::move(imgs)});
                } else {
                    auto f2 = Field::extend(c.field, fc.poly, {}, false);
                    imgs.push_back(f2->generator());
                    next.push_back({f2, std::move(imgs)});
                }
            }
        }
        comps = std::move(next);
        src = layer;
    }
    std::vector<TensorComponent> out;
    for (auto &c : comps) {
        out.push_back({c.field, Embedding(L, c.field, std::move(c.images)), 1});
    }
    return out;
}

} // namespace mw::ff

#endif
