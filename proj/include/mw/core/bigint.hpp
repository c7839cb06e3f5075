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

#ifndef MW_CORE_BIGINT_HPP
#define MW_CORE_BIGINT_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mw {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int &n)
{
    return n.str();
}

inline bool fits_int64(const Int &n)
{
    return n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max();
}

// Non-negative remainder.
inline Int mod_floor(const Int &a, const Int &m)
{
    Int r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

inline Int gcd(Int a, Int b)
{
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

} // namespace mw

#endif
