#include "mrle/codec_bit.hpp"

namespace mrle {

namespace {

constexpr std::uint32_t kFieldEscape = 127; // add 127, another field follows
constexpr std::uint64_t kFieldMax = 127;    // largest contribution of one field

// Calls fn(value, length) for every maximal run of the input.
template <typename Fn>
void for_each_bit_run(const BitString& input, Fn&& fn) {
    const std::size_t n = input.size();
    std::size_t i = 0;
    while (i < n) {
        const bool v = input.bit(i);
        std::size_t j = i + 1;
        while (j < n && input.bit(j) == v)
            ++j;
        fn(v, static_cast<std::uint64_t>(j - i));
        i = j;
    }
}

} // namespace

std::int64_t saved_bits(std::uint64_t length) {
    if (length == 0)
        throw Error("saved_bits: run length must be >= 1");
    const std::uint64_t fields = bit_run_field_count(length);
    return static_cast<std::int64_t>(length) - 1 - 7 * static_cast<std::int64_t>(fields);
}

void append_bit_run_fields(BitString& out, std::uint64_t length) {
    if (length == 0)
        throw Error("append_bit_run_fields: run length must be >= 1");
    while (length > kFieldMax) {
        out.append_field(kFieldEscape, 7);
        length -= kFieldMax;
    }
    // Terminating field f contributes f + 1, so f <= 126 here.
    out.append_field(static_cast<std::uint32_t>(length - 1), 7);
}

std::uint64_t read_bit_run_fields(BitReader& reader) {
    std::uint64_t total = 0;
    for (;;) {
        const std::uint32_t f = reader.read_field(7);
        if (f == kFieldEscape) {
            total += kFieldMax;
            continue;
        }
        return total + f + 1;
    }
}

BitAnalysis analyze_bits(const BitString& input) {
    BitAnalysis analysis;
    analysis.input_bits = input.size();
    for_each_bit_run(input, [&](bool v, std::uint64_t len) {
        analysis.counters[v ? 1 : 0] += saved_bits(len);
    });
    analysis.flags.zero_compressible = analysis.counters[0] > 0;
    analysis.flags.one_compressible = analysis.counters[1] > 0;

    std::int64_t saved = 0;
    if (analysis.counters[0] > 0)
        saved += analysis.counters[0];
    if (analysis.counters[1] > 0)
        saved += analysis.counters[1];
    analysis.predicted_payload_bits = analysis.input_bits - static_cast<std::uint64_t>(saved);
    return analysis;
}

BitEncodeResult encode_bits(const BitString& input) {
    BitEncodeResult result;
    result.flags = analyze_bits(input).flags;
    for_each_bit_run(input, [&](bool v, std::uint64_t len) {
        if (result.flags.test(v)) {
            result.payload.push_back(v);
            append_bit_run_fields(result.payload, len);
        } else {
            result.payload.append_run(v, len);
        }
    });
    return result;
}

BitString decode_bits(const BitCompList& flags, const BitString& payload,
                      std::uint64_t original_bit_count) {
    BitString out;
    BitReader reader(payload);
    while (out.size() < original_bit_count) {
        const bool v = reader.read_bit();
        if (flags.test(v)) {
            const std::uint64_t len = read_bit_run_fields(reader);
            if (len > original_bit_count - out.size())
                throw LengthMismatch("decode_bits: run overshoots the original bit count");
            out.append_run(v, len);
        } else {
            out.push_back(v);
        }
    }
    // Only byte-padding may remain, and it must be zero.
    if (reader.remaining() >= 8)
        throw LengthMismatch("decode_bits: payload continues past the original bit count");
    while (!reader.done())
        if (reader.read_bit())
            throw LengthMismatch("decode_bits: nonzero bits after the final token");
    return out;
}

} // namespace mrle
