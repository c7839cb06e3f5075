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

#ifndef MW_CORE_RNG_HPP
#define MW_CORE_RNG_HPP

#include <cstdint>
#include <random>

namespace mw {

// Seeded generator whose derived values do not depend on the standard
// library's distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : m_eng(seed) {}

    std::uint64_t next()
    {
        return m_eng();
    }
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = m_eng();
        } while (x >= limit);
        return x % n;
    }
    // Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    bool coin()
    {
        return (m_eng() & 1u) != 0;
    }
    Rng fork(std::uint64_t salt)
    {
        return Rng(m_eng() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }

private:
    std::mt19937_64 m_eng;
};

} // namespace mw

#endif
