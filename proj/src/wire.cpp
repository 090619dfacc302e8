#include "bsmcodec/wire.hpp"

#include <string>

#include "bsmcodec/codec.hpp"
#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

constexpr std::size_t kHeaderBytes = 5; // id byte plus 32-bit length

} // namespace

std::vector<std::uint8_t> pack_frame(const WireFrame& frame) {
    if (frame.codec_id < 1 || frame.codec_id > codec_names().size())
        throw CodecError(ErrorKind::UnknownCodec,
                         "cannot pack frame with codec id " + std::to_string(frame.codec_id));
    std::vector<std::uint8_t> bytes;
    bytes.reserve(kHeaderBytes + frame.payload.bytes().size());
    bytes.push_back(frame.codec_id);
    auto bit_len = static_cast<std::uint32_t>(frame.payload.size());
    for (int shift = 24; shift >= 0; shift -= 8)
        bytes.push_back(static_cast<std::uint8_t>(bit_len >> shift));
    auto payload = frame.payload.bytes();
    bytes.insert(bytes.end(), payload.begin(), payload.end());
    return bytes;
}

WireFrame parse_frame(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderBytes)
        throw CodecError(ErrorKind::TruncatedStream,
                         "frame shorter than its 5-byte header");

    WireFrame frame;
    frame.codec_id = bytes[0];
    if (frame.codec_id < 1 || frame.codec_id > codec_names().size())
        throw CodecError(ErrorKind::UnknownCodec,
                         "unknown codec id " + std::to_string(frame.codec_id));

    std::uint32_t bit_len = 0;
    for (std::size_t i = 1; i < kHeaderBytes; ++i)
        bit_len = (bit_len << 8) | bytes[i];

    std::size_t expected = kHeaderBytes + (bit_len + 7) / 8;
    if (bytes.size() < expected)
        throw CodecError(ErrorKind::TruncatedStream,
                         "frame declares " + std::to_string(bit_len) +
                             " payload bits but ends early");
    if (bytes.size() > expected)
        throw CodecError(ErrorKind::MalformedFrame,
                         std::to_string(bytes.size() - expected) +
                             " trailing bytes after the payload");

    frame.payload = BitString::from_bytes(bytes.subspan(kHeaderBytes), bit_len);
    return frame;
}

} // namespace bsm
