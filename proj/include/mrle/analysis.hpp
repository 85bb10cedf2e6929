#pragma once

#include <array>
#include <cstdint>

#include "mrle/common.hpp"

namespace mrle {

// A maximal repetition in the input: `length` copies of `value`.
struct Run {
    std::uint8_t value = 0;
    std::uint64_t length = 0;

    bool operator==(const Run&) const = default;
};

// Splits the input into maximal runs. Adjacent runs always differ in value
// and the lengths sum to the input size.
std::vector<Run> scan_runs(ByteSpan input);

// Net bytes saved by run-encoding one run of the given length: the run costs
// one value byte plus one run byte per chunk of up to 254 repetitions,
// against `length` literal bytes. Negative means the encoding would grow.
//
//   saved_bytes(1) == -1, saved_bytes(2) == 0, saved_bytes(n<=254) == n - 2.
std::int64_t saved_bytes(std::uint64_t length);

using CounterArray = std::array<std::int64_t, 256>;

// Per-symbol sum of saved_bytes over all maximal runs of that symbol.
// Symbols absent from the input stay at 0.
CounterArray compute_counters(ByteSpan input);

// Single-pass reference implementation; kept as the oracle for the
// chunk-parallel version above.
CounterArray compute_counters_serial(ByteSpan input);

namespace detail {
// Chunked run-ownership scan: a chunk owns every run that starts inside it
// and measures it to its true end. Exposed so tests can force arbitrary
// chunk boundaries; compute_counters calls this with one chunk per thread.
CounterArray compute_counters_chunked(ByteSpan input, int num_chunks);

// Inputs below this size take the serial path.
inline constexpr std::size_t kParallelMinBytes = 256 * 1024;
} // namespace detail

// 256 compressibility flags, one per symbol value, stored in packed form:
// symbol c lives in byte c/8 at bit c%8 (LSB first). The packed layout is
// the on-disk format and is bit-exact.
class CompBitList {
public:
    static constexpr std::size_t kPackedSize = 32;

    bool test(std::uint8_t symbol) const {
        return (bits_[symbol >> 3] >> (symbol & 7)) & 1u;
    }

    void set(std::uint8_t symbol, bool on = true) {
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (symbol & 7));
        if (on)
            bits_[symbol >> 3] |= mask;
        else
            bits_[symbol >> 3] &= static_cast<std::uint8_t>(~mask);
    }

    bool any() const {
        for (std::uint8_t b : bits_)
            if (b)
                return true;
        return false;
    }

    std::array<std::uint8_t, kPackedSize> pack() const { return bits_; }

    // Rejects anything that is not exactly 32 bytes.
    static CompBitList unpack(ByteSpan packed);

    bool operator==(const CompBitList&) const = default;

private:
    std::array<std::uint8_t, kPackedSize> bits_{};
};

// Flag a symbol compressible iff its counter is strictly positive; a counter
// of exactly 0 gains nothing and stays a literal.
CompBitList build_comp_bit_list(const CounterArray& counters);

struct AnalysisReport {
    CounterArray counters{};
    CompBitList comp_bit_list;
    std::uint64_t input_length = 0;
    // input_length minus the sum of all positive, flagged counters. Always
    // equals the payload size codec_byte actually produces.
    std::uint64_t predicted_payload = 0;
};

AnalysisReport analyze(ByteSpan input);

} // namespace mrle
