#pragma once

#include <cstdint>

#include "mrle/common.hpp"

namespace mrle {

// A sequence of bits packed MSB-first: bit i lives in byte i/8 at bit
// position 7-(i%8). The final storage byte is always zero-padded, so equal
// bitstrings have equal storage.
class BitString {
public:
    BitString() = default;

    // Every byte contributes 8 bits, most significant first.
    static BitString from_bytes(ByteSpan data) {
        BitString s;
        s.bytes_.assign(data.begin(), data.end());
        s.bit_count_ = data.size() * 8;
        return s;
    }

    // First `bit_count` bits of `data`; trailing padding bits are dropped.
    static BitString from_bytes(ByteSpan data, std::size_t bit_count) {
        if (bit_count > data.size() * 8)
            throw TruncatedInput("BitString: fewer bytes than the stated bit count needs");
        BitString s;
        s.bytes_.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
        s.bit_count_ = bit_count;
        if (bit_count % 8 != 0)
            s.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - bit_count % 8));
        return s;
    }

    void push_back(bool bit) {
        if (bit_count_ % 8 == 0)
            bytes_.push_back(0);
        if (bit)
            bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bit_count_ % 8));
        ++bit_count_;
    }

    void append_run(bool bit, std::uint64_t count) {
        for (std::uint64_t i = 0; i < count; ++i)
            push_back(bit);
    }

    // Appends `width` bits of `value`, most significant first.
    void append_field(std::uint32_t value, int width) {
        for (int i = width - 1; i >= 0; --i)
            push_back((value >> i) & 1u);
    }

    bool bit(std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    std::size_t size() const { return bit_count_; }
    bool empty() const { return bit_count_ == 0; }

    // Packed storage, zero-padded to a whole byte.
    const Bytes& storage() const { return bytes_; }

    bool operator==(const BitString&) const = default;

private:
    Bytes bytes_;
    std::size_t bit_count_ = 0;
};

class BitReader {
public:
    explicit BitReader(const BitString& source) : source_(&source) {}

    std::size_t remaining() const { return source_->size() - cursor_; }
    bool done() const { return cursor_ == source_->size(); }

    bool read_bit() {
        if (done())
            throw TruncatedInput("BitReader: read past end of bitstring");
        return source_->bit(cursor_++);
    }

    // Reads `width` bits, most significant first.
    std::uint32_t read_field(int width) {
        std::uint32_t value = 0;
        for (int i = 0; i < width; ++i)
            value = (value << 1) | static_cast<std::uint32_t>(read_bit());
        return value;
    }

private:
    const BitString* source_;
    std::size_t cursor_ = 0;
};

} // namespace mrle
