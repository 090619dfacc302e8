#include "bsmcodec/arithmetic.hpp"

#include <cmath>
#include <limits>

#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

constexpr std::uint64_t kTop = std::uint64_t{1} << kRegisterBits;
constexpr std::uint64_t kHalf = kTop >> 1;
constexpr std::uint64_t kQuarter = kTop >> 2;
constexpr std::uint64_t kThreeQuarters = kHalf + kQuarter;
constexpr std::uint64_t kMask = kTop - 1;

} // namespace

FrequencyModel quantize_distribution(const CharDistribution& dist, std::uint64_t scale) {
    if (scale < dist.probs.size())
        throw CodecError(ErrorKind::InvalidArgument,
                         "quantization scale must be at least the alphabet size");
    FrequencyModel model;
    model.counts.reserve(dist.probs.size());
    for (double p : dist.probs) {
        auto count = static_cast<std::uint64_t>(
            std::max<long long>(1, std::llround(p * static_cast<double>(scale))));
        model.counts.push_back(static_cast<std::uint32_t>(count));
    }
    model.cumulative.resize(model.counts.size() + 1, 0);
    for (std::size_t i = 0; i < model.counts.size(); ++i)
        model.cumulative[i + 1] = model.cumulative[i] + model.counts[i];
    model.total = model.cumulative.back();
    if (model.total > (kTop >> 2))
        throw CodecError(ErrorKind::InvalidArgument,
                         "model total exceeds the coder's register headroom");
    return model;
}

ArithmeticFrame ac_encode(std::string_view text, const FrequencyModel& model) {
    if (text.size() > std::numeric_limits<std::uint16_t>::max())
        throw CodecError(ErrorKind::InvalidArgument,
                         "text longer than 65535 characters");

    ArithmeticFrame frame;
    frame.char_count = static_cast<std::uint16_t>(text.size());

    // Zero symbols narrow no interval, so there is nothing to flush either.
    if (text.empty()) return frame;

    std::uint64_t low = 0;
    std::uint64_t high = kMask;
    std::uint64_t pending = 0;

    auto emit = [&](bool bit) {
        frame.payload.push_back(bit);
        for (; pending > 0; --pending) frame.payload.push_back(!bit);
    };

    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        int sym = alphabet_index(text[pos]);
        if (sym < 0)
            throw CodecError(ErrorKind::OutOfAlphabet,
                             std::string("character '") + text[pos] +
                                 "' at position " + std::to_string(pos) +
                                 " is outside the lowercase-plus-space alphabet");

        std::uint64_t range = high - low + 1;
        high = low + range * model.cumulative[static_cast<std::size_t>(sym) + 1] / model.total - 1;
        low = low + range * model.cumulative[static_cast<std::size_t>(sym)] / model.total;

        for (;;) {
            if (high < kHalf) {
                emit(false);
            } else if (low >= kHalf) {
                emit(true);
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                ++pending;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
    }

    // Two final bits pick a quarter wholly inside [low, high].
    ++pending;
    emit(low >= kQuarter);
    return frame;
}

std::string ac_decode(const ArithmeticFrame& frame, const FrequencyModel& model) {
    std::string out;
    out.reserve(frame.char_count);
    if (frame.char_count == 0) return out;

    std::size_t next_bit = 0;
    std::size_t virtual_bits = 0;
    auto read_bit = [&]() -> std::uint64_t {
        if (next_bit < frame.payload.size()) return frame.payload.bit(next_bit++) ? 1 : 0;
        // The encoder's flush guarantees trailing zeros suffice, but only
        // for about a register's worth: needing more means lost payload.
        if (++virtual_bits > kRegisterBits)
            throw CodecError(ErrorKind::TruncatedStream,
                             "arithmetic payload too short for its character count");
        return 0;
    };

    std::uint64_t low = 0;
    std::uint64_t high = kMask;
    std::uint64_t value = 0;
    for (unsigned i = 0; i < kRegisterBits; ++i) value = (value << 1) | read_bit();

    for (std::uint16_t produced = 0; produced < frame.char_count; ++produced) {
        std::uint64_t range = high - low + 1;
        std::uint64_t scaled = ((value - low + 1) * model.total - 1) / range;

        // cumulative[] is sorted, so locate the symbol whose slot holds scaled.
        std::size_t lo = 0, hi = model.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (model.cumulative[mid + 1] <= scaled)
                lo = mid + 1;
            else
                hi = mid;
        }

        high = low + range * model.cumulative[lo + 1] / model.total - 1;
        low = low + range * model.cumulative[lo] / model.total;
        out.push_back(kAlphabet[lo]);

        for (;;) {
            if (high < kHalf) {
                // nothing to subtract
            } else if (low >= kHalf) {
                low -= kHalf;
                high -= kHalf;
                value -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                low -= kQuarter;
                high -= kQuarter;
                value -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | read_bit();
        }
    }
    return out;
}

BitString serialize(const ArithmeticFrame& frame) {
    BitString bits;
    bits.append_uint(frame.char_count, 16);
    bits.append(frame.payload);
    return bits;
}

ArithmeticFrame parse_arithmetic_frame(const BitString& bits) {
    if (bits.size() < 16)
        throw CodecError(ErrorKind::TruncatedStream,
                         "arithmetic frame shorter than its 16-bit count field");
    BitCursor cur(bits);
    ArithmeticFrame frame;
    frame.char_count = static_cast<std::uint16_t>(cur.read_uint(16));
    BitString payload;
    while (cur.remaining() > 0) payload.push_back(cur.read_bit());
    frame.payload = std::move(payload);
    return frame;
}

} // namespace bsm
