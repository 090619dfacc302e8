#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsm {

// An ordered bit sequence with an explicit bit length, independent of byte
// padding. Bits are packed MSB-first; padding bits in the final byte are
// always zero, so value equality is plain member equality.
class BitString {
public:
    BitString() = default;

    // Parses an ASCII string of '0'/'1' characters.
    static BitString from_string(std::string_view bits);

    // Reconstructs a BitString from packed bytes. Padding bits in the final
    // byte are ignored (forced to zero). Throws MalformedFrame when bit_len
    // exceeds the buffer.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_len);

    void push_back(bool bit);
    void append(const BitString& other);

    // Appends the `width` low bits of `value`, most significant first.
    void append_uint(std::uint64_t value, unsigned width);

    bool bit(std::size_t index) const;

    std::size_t size() const { return bit_len_; }
    bool empty() const { return bit_len_ == 0; }

    // Packed MSB-first representation, final byte zero-padded.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_len_ = 0;
};

// Sequential reader over a BitString. Not owning; the source must outlive
// the cursor. Reads past the end throw TruncatedStream.
class BitCursor {
public:
    explicit BitCursor(const BitString& source) : source_(&source) {}

    std::size_t position() const { return position_; }
    std::size_t remaining() const { return source_->size() - position_; }

    bool read_bit();
    BitString read_bits(std::size_t count);

    // Reads `width` bits as an unsigned integer, most significant first.
    std::uint64_t read_uint(unsigned width);

private:
    const BitString* source_;
    std::size_t position_ = 0;
};

} // namespace bsm
