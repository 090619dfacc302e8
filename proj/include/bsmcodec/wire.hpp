#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsmcodec/bitio.hpp"

namespace bsm {

// Self-describing envelope used when a coded message leaves the process:
// one codec id byte, a 32-bit big-endian payload length in bits, then the
// payload packed most significant bit first with zero padding.
struct WireFrame {
    std::uint8_t codec_id = 0;
    BitString payload;

    friend bool operator==(const WireFrame&, const WireFrame&) = default;
};

std::vector<std::uint8_t> pack_frame(const WireFrame& frame);

// Throws TruncatedStream when bytes end before the declared payload does,
// MalformedFrame on trailing bytes, and UnknownCodec for an id outside the
// registered range.
WireFrame parse_frame(std::span<const std::uint8_t> bytes);

} // namespace bsm
