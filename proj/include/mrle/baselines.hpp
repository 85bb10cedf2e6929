#pragma once

#include "mrle/common.hpp"

namespace mrle {

// Classic run-first RLE: a stream of [run][value] pairs, run in 1..=255.
// Runs longer than 255 split greedily into 255-sized chunks plus remainder.
// Worst case doubles the input (all runs of length 1).
Bytes rle_encode(ByteSpan input);

// Inverse of rle_encode. Throws TruncatedInput on odd-length input and
// InvalidRunByte on a zero run byte.
Bytes rle_decode(ByteSpan input);

// PackBits per the TIFF 6.0 description. Control byte n:
//   0..=127   n+1 literal bytes follow
//   129..=255 repeat the next byte 257-n times
//   128       no-op, skipped on decode, never emitted by the encoder
// Encoder policy: repeat tokens only for runs of 3 or more; shorter runs
// fold into literal groups of up to 128 bytes.
Bytes packbits_encode(ByteSpan input);
Bytes packbits_decode(ByteSpan input);

} // namespace mrle
