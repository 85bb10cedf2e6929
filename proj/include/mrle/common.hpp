#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrle {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// Base for all codec/format errors. The CLI maps these to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stream or header ends in the middle of a token, field or fixed-size block.
struct TruncatedInput : Error {
    using Error::Error;
};

// A run byte of value 0 was found; zero-length runs are unrepresentable.
struct InvalidRunByte : Error {
    using Error::Error;
};

// Bad magic, unknown version/mode, reserved bits set, wrong block size.
struct FormatError : Error {
    using Error::Error;
};

// A bit-level payload parses completely but to the wrong bit count.
struct LengthMismatch : Error {
    using Error::Error;
};

inline ByteSpan as_byte_span(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

} // namespace mrle
