#pragma once

#include "mrle/analysis.hpp"
#include "mrle/common.hpp"

namespace mrle {

// Byte-level codec. Token stream layout, for each maximal run (v, L) of the
// original data:
//
//   flag[v] set:   [v] [run bytes]   one run byte per chunk of up to 254
//   flag[v] clear: [v] repeated L times, no run bytes at all
//
// Run byte convention: 1..=254 is a literal chunk length and terminates the
// run; 255 means "add 254 and another run byte follows"; 0 never appears.

// Number of run bytes needed for a run of `length`: ceil(length / 254).
inline std::uint64_t run_length_byte_count(std::uint64_t length) {
    return (length + 253) / 254;
}

// Appends the chunked run bytes for `length` (>= 1) to `out`.
void append_run_length(Bytes& out, std::uint64_t length);

// Same, returning the bytes; convenience for tests and small runs.
Bytes encode_run_length(std::uint64_t length);

// Reads one chunked run-byte sequence from payload starting at `offset`,
// advancing it. Throws TruncatedInput at end of data mid-sequence and
// InvalidRunByte on a zero run byte.
std::uint64_t decode_run_length(ByteSpan payload, std::size_t& offset);

struct EncodeResult {
    CompBitList flags;
    Bytes payload;
};

// Two-pass encode: analyze the whole input, then emit tokens under the
// resulting flag list. The payload size always equals the analysis's
// predicted_payload.
EncodeResult mrle_encode(ByteSpan input);

// Encode under a caller-supplied flag list. Exposed so tests can force
// arbitrary masks (optimality/monotonicity checks); mrle_encode uses the
// analysis mask.
Bytes encode_with_mask(ByteSpan input, const CompBitList& flags);

// Serial reference for the chunk-parallel encoder; identical output.
Bytes encode_with_mask_serial(ByteSpan input, const CompBitList& flags);

namespace detail {
// Two-phase parallel encode: per-chunk output sizes, exclusive prefix sum,
// then disjoint writes. Byte-identical to the serial encoder.
Bytes encode_with_mask_chunked(ByteSpan input, const CompBitList& flags, int num_chunks);
} // namespace detail

// Inverse of mrle_encode: reads a symbol, consults the flags, and either
// expands a run or copies the literal. Consumes every payload byte.
Bytes mrle_decode(const CompBitList& flags, ByteSpan payload);

} // namespace mrle
