#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsmcodec/bitio.hpp"

namespace bsm {

// Dictionary coder tuned for short texts: the dictionary starts with just
// the 27 alphabet symbols and every code in a frame shares one fixed width,
// chosen after encoding as the smallest width that can address the final
// dictionary. The dictionary stops growing at kLzwMaxDictSize entries.
inline constexpr std::size_t kLzwMaxDictSize = 4096;
inline constexpr unsigned kLzwMinWidth = 5;  // covers the 27 seed entries
inline constexpr unsigned kLzwMaxWidth = 12; // covers kLzwMaxDictSize

struct LzwFrame {
    unsigned code_width = 0;
    std::vector<std::uint16_t> codes;

    friend bool operator==(const LzwFrame&, const LzwFrame&) = default;
};

// Throws InvalidArgument for empty input (a frame cannot express zero
// codes distinguishably) and OutOfAlphabet for characters outside the
// lowercase-plus-space alphabet.
LzwFrame lzw_encode(std::string_view text);

// Throws MalformedFrame when a code falls outside the dictionary as it
// existed at that point of the stream, or when the frame has no codes.
std::string lzw_decode(const LzwFrame& frame);

// Wire layout: 4-bit header holding code_width, then the codes back to
// back, each code_width bits. Unpack throws MalformedFrame for a width
// outside [kLzwMinWidth, kLzwMaxWidth] and TruncatedStream when the bits
// after the header do not divide evenly into codes.
BitString pack(const LzwFrame& frame);
LzwFrame unpack_lzw_frame(const BitString& bits);

} // namespace bsm
