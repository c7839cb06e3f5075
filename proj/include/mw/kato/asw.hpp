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

#ifndef MW_KATO_ASW_HPP
#define MW_KATO_ASW_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <mw/abgrp/finite.hpp>
#include <mw/core/error.hpp>
#include <mw/ff/field.hpp>
#include <mw/trunc/tset.hpp>
#include <mw/witt/maps.hpp>
#include <mw/witt/ring.hpp>

namespace mw::kato {

using witt::FieldWitt;

// Group structure of a Witt ring over a finite field, by enumeration.
inline abgrp::FiniteStructure witt_group_structure(const FieldWitt &W, std::size_t bound)
{
    const auto n = W.cardinality();
    if (n > bound) {
        throw BoundExceeded("Witt ring enumeration", n, bound);
    }
    return abgrp::structure_of_indexed(
        n, [&](std::size_t a, std::size_t b) { return W.index(W.add(W.at(a), W.at(b))); }, 0,
        [&](std::size_t a) { return W.index(W.neg(W.at(a))); }, bound);
}

// W(k) / (Phi - id) W(k) for the coordinatewise Frobenius Phi, computed by
// enumerating cosets of the image.
struct AswCokernel {
    FieldWitt ring;
    std::vector<std::size_t> class_of_index; // Witt index -> class id
    std::vector<std::uint64_t> representative;
    std::size_t image_size = 0;
    abgrp::FiniteStructure structure; // on class ids

    std::vector<Int> invariants() const
    {
        return structure.invariants();
    }
    // Coordinates of the class of x in the cyclic decomposition.
    std::vector<std::uint64_t> class_coords(const FieldWitt::Vector &x) const
    {
        return structure.coords.at(class_of_index.at(ring.index(x)));
    }
};

// Works for any truncation set; for p-typical sets the operator is wp.
inline AswCokernel wp_cokernel(const FieldWitt &W, std::size_t bound = abgrp::default_enumeration_bound)
{
    const auto n = W.cardinality();
    if (n > bound) {
        throw BoundExceeded("Witt ring enumeration", n, bound);
    }
    std::vector<char> in_image(n, 0);
    std::vector<std::uint64_t> image;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto x = W.at(i);
        const auto y = W.index(W.sub(witt::frobenius_coords(W, x), x));
        if (!in_image[y]) {
            in_image[y] = 1;
            image.push_back(y);
        }
    }
    AswCokernel out{W, std::vector<std::size_t>(n, SIZE_MAX), {}, image.size(), {}};
    for (std::uint64_t i = 0; i < n; ++i) {
        if (out.class_of_index[i] != SIZE_MAX) {
            continue;
        }
        const std::size_t cls = out.representative.size();
        out.representative.push_back(i);
        const auto x = W.at(i);
        for (auto j : image) {
            out.class_of_index[W.index(W.add(x, W.at(j)))] = cls;
        }
    }
    const std::size_t classes = out.representative.size();
    if (classes * image.size() != n) {
        throw Error("image of the Artin-Schreier-Witt operator is not a subgroup");
    }
    out.structure = abgrp::structure_of_indexed(
        classes,
        [&](std::size_t a, std::size_t b) {
            return out.class_of_index[W.index(W.add(W.at(out.representative[a]), W.at(out.representative[b])))];
        },
        out.class_of_index[0],
        [&](std::size_t a) { return out.class_of_index[W.index(W.neg(W.at(out.representative[a])))]; }, bound);
    return out;
}

inline AswCokernel asw_cokernel(const ff::FieldRef &k, unsigned r, std::size_t bound = abgrp::default_enumeration_bound)
{
    return wp_cokernel(FieldWitt(trunc::p_typical(k->characteristic(), r), k), bound);
}

} // namespace mw::kato

#endif
