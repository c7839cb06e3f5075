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

#ifndef MW_CORE_CURSOR_HPP
#define MW_CORE_CURSOR_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <mw/core/error.hpp>

namespace mw {

// Minimal recursive-descent helper; every failure reports its offset.
class Cursor
{
public:
    explicit Cursor(std::string_view s) : m_s(s) {}

    std::size_t pos() const
    {
        return m_pos;
    }
    bool done()
    {
        skip_ws();
        return m_pos >= m_s.size();
    }
    char peek()
    {
        skip_ws();
        return m_pos < m_s.size() ? m_s[m_pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word)
    {
        skip_ws();
        if (m_s.substr(m_pos, word.size()) == word) {
            m_pos += word.size();
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    void expect(std::string_view word)
    {
        if (!accept(word)) {
            fail("expected '" + std::string(word) + "'");
        }
    }
    std::uint64_t number()
    {
        skip_ws();
        const std::size_t start = m_pos;
        std::uint64_t v = 0;
        while (m_pos < m_s.size() && std::isdigit(static_cast<unsigned char>(m_s[m_pos]))) {
            const auto d = static_cast<std::uint64_t>(m_s[m_pos] - '0');
            if (v > (UINT64_MAX - d) / 10) {
                throw ParseError("integer too large", start);
            }
            v = v * 10 + d;
            ++m_pos;
        }
        if (m_pos == start) {
            fail("expected a number");
        }
        return v;
    }
    std::string identifier()
    {
        skip_ws();
        const std::size_t start = m_pos;
        while (m_pos < m_s.size() && (std::isalnum(static_cast<unsigned char>(m_s[m_pos])) || m_s[m_pos] == '_')) {
            ++m_pos;
        }
        if (m_pos == start || std::isdigit(static_cast<unsigned char>(m_s[start]))) {
            m_pos = start;
            fail("expected an identifier");
        }
        return std::string(m_s.substr(start, m_pos - start));
    }
    void expect_end()
    {
        if (!done()) {
            fail("unexpected trailing input");
        }
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what, m_pos);
    }

private:
    void skip_ws()
    {
        while (m_pos < m_s.size() && std::isspace(static_cast<unsigned char>(m_s[m_pos]))) {
            ++m_pos;
        }
    }

    std::string_view m_s;
    std::size_t m_pos = 0;
};

} // namespace mw

#endif
