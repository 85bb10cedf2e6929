#pragma once

#include <array>
#include <cstdint>

#include "mrle/bitstring.hpp"
#include "mrle/common.hpp"

namespace mrle {

// Bit-level codec for two-symbol streams (monochrome rasters, fax data).
// For each maximal run of bit b:
//
//   b compressible:   [b] [7-bit run fields]
//   b uncompressible: b repeated literally
//
// 7-bit field convention: raw value 127 means "add 127, another field
// follows"; raw value f <= 126 adds f + 1 and terminates. A run of 128 is
// the two fields [127][0]. Fields are written MSB-first.

struct BitCompList {
    bool zero_compressible = false;
    bool one_compressible = false;

    bool test(bool value) const { return value ? one_compressible : zero_compressible; }

    bool operator==(const BitCompList&) const = default;
};

// Net bits saved by run-encoding one run: 1 value bit plus 7 bits per chunk
// of up to 127, against `length` literal bits. length <= 127 gives
// length - 8.
std::int64_t saved_bits(std::uint64_t length);

// Appends the 7-bit run fields for `length` (>= 1).
void append_bit_run_fields(BitString& out, std::uint64_t length);

// Field count for a run of `length`: ceil(length / 127).
inline std::uint64_t bit_run_field_count(std::uint64_t length) {
    return (length + 126) / 127;
}

// Reads one field sequence; inverse of append_bit_run_fields.
std::uint64_t read_bit_run_fields(BitReader& reader);

struct BitAnalysis {
    std::array<std::int64_t, 2> counters{}; // bits saved for values 0 and 1
    BitCompList flags;
    std::uint64_t input_bits = 0;
    std::uint64_t predicted_payload_bits = 0;
};

BitAnalysis analyze_bits(const BitString& input);

struct BitEncodeResult {
    BitCompList flags;
    BitString payload;
};

BitEncodeResult encode_bits(const BitString& input);

// Inverse of encode_bits. Stops after exactly original_bit_count output
// bits; up to 7 trailing zero padding bits in the payload are tolerated
// (byte-packed containers cannot store the exact payload bit count).
// Throws TruncatedInput if the payload runs out first, LengthMismatch if a
// run overshoots the count or unparsed non-padding bits remain.
BitString decode_bits(const BitCompList& flags, const BitString& payload,
                      std::uint64_t original_bit_count);

} // namespace mrle
