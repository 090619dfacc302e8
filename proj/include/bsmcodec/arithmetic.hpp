#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsmcodec/bitio.hpp"
#include "bsmcodec/corpus.hpp"

namespace bsm {

// Integer symbol frequencies with precomputed cumulative sums, the model
// both ends of the arithmetic coder share.
struct FrequencyModel {
    std::vector<std::uint32_t> counts;     // one positive count per symbol
    std::vector<std::uint64_t> cumulative; // size() + 1 entries, cumulative[0] = 0
    std::uint64_t total = 0;

    std::size_t size() const { return counts.size(); }
};

// Register width of the coder. The model total must stay at or below
// 2^(kRegisterBits - 2) so the coding interval can never collapse.
inline constexpr unsigned kRegisterBits = 32;

// Default quantization scale; keeps per-symbol probability distortion
// below 1e-5 while leaving ample register headroom.
inline constexpr std::uint64_t kDefaultScale = 65536;

// Realizes a probability distribution as integer counts:
// count_i = max(1, round(p_i * scale)). Throws InvalidArgument when scale
// is below the alphabet size or the resulting total exceeds the register
// bound.
FrequencyModel quantize_distribution(const CharDistribution& dist,
                                     std::uint64_t scale = kDefaultScale);

// The whole message encoded as one number: the payload is the bit expansion
// of a value inside the final coding interval, and char_count tells the
// decoder when to stop (the alphabet carries no end-of-message symbol).
struct ArithmeticFrame {
    std::uint16_t char_count = 0;
    BitString payload;

    friend bool operator==(const ArithmeticFrame&, const ArithmeticFrame&) = default;
};

// Encodes text with E1/E2 renormalization and an E3 straddle counter, then
// flushes with the two-bit quarter disambiguation, so the decoder may treat
// any bits past the payload as zero. Throws OutOfAlphabet for characters
// outside the model and InvalidArgument for texts above 65535 characters.
ArithmeticFrame ac_encode(std::string_view text, const FrequencyModel& model);

// Exact inverse of ac_encode for frames produced under the same model.
// Reading more than kRegisterBits past the payload end throws
// TruncatedStream.
std::string ac_decode(const ArithmeticFrame& frame, const FrequencyModel& model);

// Wire layout: 16-bit big-endian char_count, then the payload bits.
BitString serialize(const ArithmeticFrame& frame);
ArithmeticFrame parse_arithmetic_frame(const BitString& bits);

} // namespace bsm
