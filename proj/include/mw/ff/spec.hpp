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

#ifndef MW_FF_SPEC_HPP
#define MW_FF_SPEC_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include <mw/core/arith.hpp>
#include <mw/core/cursor.hpp>
#include <mw/ff/field.hpp>

namespace mw::ff {

struct FieldSpec {
    std::uint64_t p = 0;
    std::vector<unsigned> layers;
};

namespace detail {

// GF(q) or GF(p^d); returns (p, d).
inline std::pair<std::uint64_t, unsigned> parse_gf(Cursor &c)
{
    c.expect("GF");
    c.expect('(');
    const std::size_t at = c.pos();
    const std::uint64_t base = c.number();
    unsigned d = 1;
    if (c.accept('^')) {
        const std::size_t dat = c.pos();
        const auto dd = c.number();
        if (dd == 0 || dd > 64) {
            throw ParseError("exponent out of range", dat);
        }
        d = static_cast<unsigned>(dd);
        if (!is_prime(base)) {
            throw ParseError("base " + std::to_string(base) + " is not prime", at);
        }
    }
    c.expect(')');
    if (d == 1 && !is_prime(base)) {
        // Prime power written as a single number.
        const auto ps = prime_divisors(base);
        if (ps.size() != 1) {
            throw ParseError(std::to_string(base) + " is not a prime power", at);
        }
        std::uint64_t q = base;
        unsigned e = 0;
        while (q > 1) {
            q /= ps[0];
            ++e;
        }
        return {ps[0], e};
    }
    return {base, d};
}

} // namespace detail

// Grammar: GF(p) | GF(q) | GF(p^d) | GF(p^d)/GF(p^e) with e | d.
inline FieldSpec parse_field_spec(std::string_view s)
{
    Cursor c(s);
    auto [p, d] = detail::parse_gf(c);
    FieldSpec out{p, {}};
    if (c.accept('/')) {
        const std::size_t at = c.pos();
        auto [p2, e] = detail::parse_gf(c);
        if (p2 != p) {
            throw ParseError("tower over a field of different characteristic", at);
        }
        if (d % e != 0) {
            throw ParseError("subfield degree does not divide field degree", at);
        }
        out.layers = {e, d / e};
    } else {
        out.layers = {d};
    }
    c.expect_end();
    return out;
}

inline FieldRef parse_field(std::string_view s, std::uint64_t seed = 0)
{
    const auto spec = parse_field_spec(s);
    return make_field(spec.p, spec.layers, seed);
}

} // namespace mw::ff

#endif
