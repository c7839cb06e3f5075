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

#ifndef MW_CORE_ERROR_HPP
#define MW_CORE_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mw {

// Base of everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on the mathematical input does not hold.
struct DomainError : Error {
    using Error::Error;
};

// Text input could not be parsed; position is a 0-based offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string &what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

// An enumeration or table would exceed a configured cap.
struct BoundExceeded : Error {
    std::uint64_t size;
    std::uint64_t bound;
    BoundExceeded(const std::string &what, std::uint64_t sz, std::uint64_t bd)
        : Error(what + ": size " + std::to_string(sz) + " exceeds bound " + std::to_string(bd)), size(sz), bound(bd)
    {
    }
};

} // namespace mw

#endif
