#pragma once

#include <array>
#include <utility>

#include "mrle/analysis.hpp"
#include "mrle/codec_bit.hpp"
#include "mrle/common.hpp"

namespace mrle {

// On-disk framing. Two layouts:
//
// Raw (the bare flag-list format, byte mode only):
//   [32-byte packed CompBitList] [payload...]
//
// Container (self-describing):
//   [4D 52 4C 45] [version 01] [mode]
//   mode 00, byte level: [32-byte packed CompBitList] [payload...]
//   mode 01, bit level:  [flag byte] [8-byte LE original bit count] [payload...]
//     flag byte bit 0 = value 0 compressible, bit 1 = value 1 compressible,
//     bits 2-7 reserved and must be zero. Payload is the bit stream packed
//     MSB-first, final byte zero-padded.

inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {0x4D, 0x52, 0x4C, 0x45};
inline constexpr std::uint8_t kContainerVersion = 1;

enum class Mode : std::uint8_t {
    ByteLevel = 0,
    BitLevel = 1,
};

struct Container {
    Mode mode = Mode::ByteLevel;
    CompBitList byte_flags;                // byte mode only
    BitCompList bit_flags;                 // bit mode only
    std::uint64_t original_bit_count = 0;  // bit mode only
    Bytes payload;
};

Bytes write_container(const Container& c);
Container read_container(ByteSpan bytes);

Bytes write_raw(const CompBitList& flags, ByteSpan payload);
std::pair<CompBitList, Bytes> read_raw(ByteSpan bytes);

// Fixed header sizes (bytes before the payload starts).
inline constexpr std::size_t kRawHeaderSize = CompBitList::kPackedSize;
inline constexpr std::size_t kByteContainerHeaderSize = 6 + CompBitList::kPackedSize; // 38
inline constexpr std::size_t kBitContainerHeaderSize = 6 + 1 + 8;                     // 15

} // namespace mrle
