#include "mrle/baselines.hpp"

#include <algorithm>

namespace mrle {

Bytes rle_encode(ByteSpan input) {
    Bytes out;
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t v = input[i];
        std::size_t j = i + 1;
        while (j < n && input[j] == v)
            ++j;
        std::uint64_t len = j - i;
        while (len > 0) {
            const std::uint64_t take = len < 255 ? len : 255;
            out.push_back(static_cast<std::uint8_t>(take));
            out.push_back(v);
            len -= take;
        }
        i = j;
    }
    return out;
}

Bytes rle_decode(ByteSpan input) {
    if (input.size() % 2 != 0)
        throw TruncatedInput("rle_decode: dangling run byte without a value");
    Bytes out;
    for (std::size_t i = 0; i < input.size(); i += 2) {
        const std::uint8_t run = input[i];
        if (run == 0)
            throw InvalidRunByte("rle_decode: run byte 0");
        out.insert(out.end(), run, input[i + 1]);
    }
    return out;
}

namespace {

constexpr std::size_t kLiteralMax = 128; // bytes per literal token
constexpr std::uint64_t kRepeatMax = 128; // copies per repeat token

void flush_literals(Bytes& out, const Bytes& pending) {
    std::size_t i = 0;
    while (i < pending.size()) {
        const std::size_t take = std::min(pending.size() - i, kLiteralMax);
        out.push_back(static_cast<std::uint8_t>(take - 1));
        out.insert(out.end(), pending.begin() + static_cast<std::ptrdiff_t>(i),
                   pending.begin() + static_cast<std::ptrdiff_t>(i + take));
        i += take;
    }
}

} // namespace

Bytes packbits_encode(ByteSpan input) {
    Bytes out;
    Bytes pending; // literal bytes not yet framed
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t v = input[i];
        std::size_t j = i + 1;
        while (j < n && input[j] == v)
            ++j;
        std::uint64_t len = j - i;
        if (len >= 3) {
            flush_literals(out, pending);
            pending.clear();
            while (len >= 3) {
                const std::uint64_t take = len < kRepeatMax ? len : kRepeatMax;
                out.push_back(static_cast<std::uint8_t>(257 - take));
                out.push_back(v);
                len -= take;
            }
        }
        // leftover 1-2 copies ride along with the next literal group
        pending.insert(pending.end(), len, v);
        i = j;
    }
    flush_literals(out, pending);
    return out;
}

Bytes packbits_decode(ByteSpan input) {
    Bytes out;
    std::size_t i = 0;
    while (i < input.size()) {
        const std::uint8_t control = input[i++];
        if (control == 128)
            continue; // no-op
        if (control < 128) {
            const std::size_t count = control + 1u;
            if (input.size() - i < count)
                throw TruncatedInput("packbits_decode: literal group cut short");
            out.insert(out.end(), input.begin() + static_cast<std::ptrdiff_t>(i),
                       input.begin() + static_cast<std::ptrdiff_t>(i + count));
            i += count;
        } else {
            if (i >= input.size())
                throw TruncatedInput("packbits_decode: repeat token without a value byte");
            out.insert(out.end(), 257u - control, input[i++]);
        }
    }
    return out;
}

} // namespace mrle
