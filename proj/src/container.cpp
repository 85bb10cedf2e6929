#include "mrle/container.hpp"

#include <algorithm>

namespace mrle {

namespace {

void append_u64_le(Bytes& out, std::uint64_t value) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t read_u64_le(ByteSpan bytes, std::size_t offset) {
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i)
        value |= static_cast<std::uint64_t>(bytes[offset + static_cast<std::size_t>(i)]) << (8 * i);
    return value;
}

} // namespace

Bytes write_container(const Container& c) {
    Bytes out;
    out.insert(out.end(), kContainerMagic.begin(), kContainerMagic.end());
    out.push_back(kContainerVersion);
    out.push_back(static_cast<std::uint8_t>(c.mode));
    if (c.mode == Mode::ByteLevel) {
        const auto packed = c.byte_flags.pack();
        out.insert(out.end(), packed.begin(), packed.end());
    } else {
        std::uint8_t flag_byte = 0;
        if (c.bit_flags.zero_compressible)
            flag_byte |= 0x01;
        if (c.bit_flags.one_compressible)
            flag_byte |= 0x02;
        out.push_back(flag_byte);
        append_u64_le(out, c.original_bit_count);
    }
    out.insert(out.end(), c.payload.begin(), c.payload.end());
    return out;
}

Container read_container(ByteSpan bytes) {
    if (bytes.size() < kContainerMagic.size())
        throw TruncatedInput("container: shorter than the magic");
    if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin()))
        throw FormatError("container: bad magic");
    if (bytes.size() < 6)
        throw TruncatedInput("container: version/mode bytes missing");
    if (bytes[4] != kContainerVersion)
        throw FormatError("container: unknown version " + std::to_string(bytes[4]));
    const std::uint8_t mode_byte = bytes[5];
    if (mode_byte > 1)
        throw FormatError("container: unknown mode " + std::to_string(mode_byte));

    Container c;
    c.mode = static_cast<Mode>(mode_byte);
    if (c.mode == Mode::ByteLevel) {
        if (bytes.size() < kByteContainerHeaderSize)
            throw TruncatedInput("container: flag list cut short");
        c.byte_flags = CompBitList::unpack(bytes.subspan(6, CompBitList::kPackedSize));
        c.payload.assign(bytes.begin() + kByteContainerHeaderSize, bytes.end());
    } else {
        if (bytes.size() < kBitContainerHeaderSize)
            throw TruncatedInput("container: bit-mode header cut short");
        const std::uint8_t flag_byte = bytes[6];
        if (flag_byte & ~0x03)
            throw FormatError("container: reserved flag bits set");
        c.bit_flags.zero_compressible = flag_byte & 0x01;
        c.bit_flags.one_compressible = flag_byte & 0x02;
        c.original_bit_count = read_u64_le(bytes, 7);
        c.payload.assign(bytes.begin() + kBitContainerHeaderSize, bytes.end());
    }
    return c;
}

Bytes write_raw(const CompBitList& flags, ByteSpan payload) {
    Bytes out;
    out.reserve(kRawHeaderSize + payload.size());
    const auto packed = flags.pack();
    out.insert(out.end(), packed.begin(), packed.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::pair<CompBitList, Bytes> read_raw(ByteSpan bytes) {
    if (bytes.size() < kRawHeaderSize)
        throw TruncatedInput("raw: input shorter than the 32-byte flag list");
    CompBitList flags = CompBitList::unpack(bytes.subspan(0, kRawHeaderSize));
    return {flags, Bytes(bytes.begin() + kRawHeaderSize, bytes.end())};
}

} // namespace mrle
