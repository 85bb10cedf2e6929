#include "mrle/codec_byte.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mrle {

namespace {

constexpr std::uint8_t kEscape = 255;    // 254 repetitions, more to follow
constexpr std::uint64_t kChunkMax = 254; // largest terminating run byte

// Writes the run bytes for one run straight into a preallocated buffer.
std::uint8_t* write_run_bytes(std::uint8_t* dst, std::uint64_t length) {
    while (length > kChunkMax) {
        *dst++ = kEscape;
        length -= kChunkMax;
    }
    *dst++ = static_cast<std::uint8_t>(length);
    return dst;
}

// Encoded size of one run under the given flag state.
std::uint64_t encoded_run_size(std::uint8_t value, std::uint64_t length, const CompBitList& flags) {
    return flags.test(value) ? 1 + run_length_byte_count(length) : length;
}

} // namespace

void append_run_length(Bytes& out, std::uint64_t length) {
    if (length == 0)
        throw Error("encode_run_length: run length must be >= 1");
    while (length > kChunkMax) {
        out.push_back(kEscape);
        length -= kChunkMax;
    }
    out.push_back(static_cast<std::uint8_t>(length));
}

Bytes encode_run_length(std::uint64_t length) {
    Bytes out;
    append_run_length(out, length);
    return out;
}

std::uint64_t decode_run_length(ByteSpan payload, std::size_t& offset) {
    std::uint64_t total = 0;
    for (;;) {
        if (offset >= payload.size())
            throw TruncatedInput("decode_run_length: payload ends mid run-byte sequence");
        const std::uint8_t b = payload[offset++];
        if (b == 0)
            throw InvalidRunByte("decode_run_length: run byte 0 is unrepresentable");
        if (b == kEscape) {
            total += kChunkMax;
            continue;
        }
        return total + b;
    }
}

Bytes encode_with_mask_serial(ByteSpan input, const CompBitList& flags) {
    Bytes out;
    out.reserve(input.size());
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t v = input[i];
        std::size_t j = i + 1;
        while (j < n && input[j] == v)
            ++j;
        const std::uint64_t len = j - i;
        if (flags.test(v)) {
            out.push_back(v);
            append_run_length(out, len);
        } else {
            out.insert(out.end(), len, v);
        }
        i = j;
    }
    return out;
}

namespace detail {

Bytes encode_with_mask_chunked(ByteSpan input, const CompBitList& flags, int num_chunks) {
    const std::size_t n = input.size();
    if (num_chunks < 2 || n < static_cast<std::size_t>(num_chunks))
        return encode_with_mask_serial(input, flags);

    const std::size_t chunks = static_cast<std::size_t>(num_chunks);
    std::vector<std::uint64_t> sizes(chunks, 0);

    // Phase 1: each chunk sums the encoded size of the runs it owns
    // (the runs starting inside it).
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / chunks;
        std::size_t i = lo;
        if (lo > 0)
            while (i < hi && input[i] == input[i - 1])
                ++i;
        std::uint64_t size = 0;
        while (i < hi) {
            const std::uint8_t v = input[i];
            std::size_t j = i + 1;
            while (j < n && input[j] == v)
                ++j;
            size += encoded_run_size(v, j - i, flags);
            i = j;
        }
        sizes[static_cast<std::size_t>(c)] = size;
    }

    std::vector<std::uint64_t> offsets(chunks, 0);
    std::exclusive_scan(sizes.begin(), sizes.end(), offsets.begin(), std::uint64_t{0});
    const std::uint64_t total = offsets.back() + sizes.back();

    Bytes out(total);

    // Phase 2: re-scan and write each chunk's tokens into its disjoint slice.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / chunks;
        std::size_t i = lo;
        if (lo > 0)
            while (i < hi && input[i] == input[i - 1])
                ++i;
        std::uint8_t* dst = out.data() + offsets[static_cast<std::size_t>(c)];
        while (i < hi) {
            const std::uint8_t v = input[i];
            std::size_t j = i + 1;
            while (j < n && input[j] == v)
                ++j;
            const std::uint64_t len = j - i;
            if (flags.test(v)) {
                *dst++ = v;
                dst = write_run_bytes(dst, len);
            } else {
                std::fill_n(dst, len, v);
                dst += len;
            }
            i = j;
        }
    }

    return out;
}

} // namespace detail

Bytes encode_with_mask(ByteSpan input, const CompBitList& flags) {
#ifdef _OPENMP
    if (input.size() >= detail::kParallelMinBytes)
        return detail::encode_with_mask_chunked(input, flags, omp_get_max_threads());
#endif
    return encode_with_mask_serial(input, flags);
}

EncodeResult mrle_encode(ByteSpan input) {
    EncodeResult result;
    result.flags = build_comp_bit_list(compute_counters(input));
    result.payload = encode_with_mask(input, result.flags);
    return result;
}

Bytes mrle_decode(const CompBitList& flags, ByteSpan payload) {
    Bytes out;
    out.reserve(payload.size());
    std::size_t offset = 0;
    while (offset < payload.size()) {
        const std::uint8_t v = payload[offset++];
        if (flags.test(v)) {
            if (offset >= payload.size())
                throw TruncatedInput("mrle_decode: flagged symbol at end of payload has no run bytes");
            const std::uint64_t len = decode_run_length(payload, offset);
            out.insert(out.end(), len, v);
        } else {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace mrle
