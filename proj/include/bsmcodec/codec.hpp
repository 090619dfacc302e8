#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsmcodec/bitio.hpp"
#include "bsmcodec/corpus.hpp"

namespace bsm {

// Uniform face over the five coding schemes so benchmarks and the CLI can
// treat them interchangeably. Character codecs accept any text over the
// lowercase-plus-space alphabet; message codecs only accept texts present
// in their table.
class Codec {
public:
    virtual ~Codec() = default;

    virtual std::string_view name() const = 0;
    virtual std::uint8_t id() const = 0;

    virtual BitString encode(std::string_view text) const = 0;
    virtual std::string decode(const BitString& bits) const = 0;
};

// Stable over-the-wire codec identifiers.
inline constexpr std::uint8_t kCodecIdHuffman = 1;
inline constexpr std::uint8_t kCodecIdArithmetic = 2;
inline constexpr std::uint8_t kCodecIdLzw = 3;
inline constexpr std::uint8_t kCodecIdAbbrev = 4;
inline constexpr std::uint8_t kCodecIdProbability = 5;

// Codec names in id order: huffman, arithmetic, lzw, abbrev, probability.
std::span<const std::string_view> codec_names();

// Factories; both throw UnknownCodec for an unrecognized selector. The
// codec keeps its own copy of the table, so the reference may be
// short-lived.
std::unique_ptr<Codec> make_codec(std::string_view name, const MessageTable& table);
std::unique_ptr<Codec> make_codec(std::uint8_t id, const MessageTable& table);

// All five codecs in id order.
std::vector<std::unique_ptr<Codec>> make_all_codecs(const MessageTable& table);

} // namespace bsm
