#include "bsmcodec/bitio.hpp"

#include "bsmcodec/error.hpp"

namespace bsm {

BitString BitString::from_string(std::string_view bits)
{
    BitString out;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw CodecError(ErrorKind::InvalidArgument,
                             std::string("bit string may contain only 0/1, got '") + c + "'");
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_len)
{
    if (bit_len > bytes.size() * 8)
        throw CodecError(ErrorKind::MalformedFrame,
                         "bit length " + std::to_string(bit_len) + " exceeds buffer of "
                             + std::to_string(bytes.size()) + " bytes");
    BitString out;
    out.bit_len_ = bit_len;
    out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_len + 7) / 8));
    // Force padding to zero so equality stays bitwise.
    if (bit_len % 8 != 0)
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - bit_len % 8));
    return out;
}

void BitString::push_back(bool bit)
{
    if (bit_len_ % 8 == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bit_len_ % 8));
    ++bit_len_;
}

void BitString::append(const BitString& other)
{
    if (bit_len_ % 8 == 0) {
        // Byte-aligned fast path: the other string is already packed.
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        bit_len_ += other.bit_len_;
        return;
    }
    for (std::size_t i = 0; i < other.bit_len_; ++i)
        push_back(other.bit(i));
}

void BitString::append_uint(std::uint64_t value, unsigned width)
{
    for (unsigned i = width; i-- > 0;)
        push_back((value >> i) & 1u);
}

bool BitString::bit(std::size_t index) const
{
    if (index >= bit_len_)
        throw CodecError(ErrorKind::InvalidArgument, "bit index out of range");
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

std::string BitString::to_string() const
{
    std::string out;
    out.reserve(bit_len_);
    for (std::size_t i = 0; i < bit_len_; ++i)
        out.push_back(bit(i) ? '1' : '0');
    return out;
}

bool BitCursor::read_bit()
{
    if (position_ >= source_->size())
        throw CodecError(ErrorKind::TruncatedStream, "bit stream exhausted at position "
                                                         + std::to_string(position_));
    return source_->bit(position_++);
}

BitString BitCursor::read_bits(std::size_t count)
{
    if (count > remaining())
        throw CodecError(ErrorKind::TruncatedStream,
                         "requested " + std::to_string(count) + " bits, only "
                             + std::to_string(remaining()) + " remain");
    BitString out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(source_->bit(position_ + i));
    position_ += count;
    return out;
}

std::uint64_t BitCursor::read_uint(unsigned width)
{
    if (width > remaining())
        throw CodecError(ErrorKind::TruncatedStream,
                         "requested " + std::to_string(width) + " bits, only "
                             + std::to_string(remaining()) + " remain");
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i)
        value = (value << 1) | (source_->bit(position_++) ? 1u : 0u);
    return value;
}

} // namespace bsm
