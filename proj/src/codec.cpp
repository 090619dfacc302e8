#include "bsmcodec/codec.hpp"

#include <array>

#include "bsmcodec/arithmetic.hpp"
#include "bsmcodec/error.hpp"
#include "bsmcodec/huffman.hpp"
#include "bsmcodec/lzw.hpp"
#include "bsmcodec/message_codec.hpp"

namespace bsm {

namespace {

constexpr std::array<std::string_view, 5> kCodecNames = {
    "huffman", "arithmetic", "lzw", "abbrev", "probability"};

class HuffmanCharCodec final : public Codec {
public:
    std::string_view name() const override { return kCodecNames[0]; }
    std::uint8_t id() const override { return kCodecIdHuffman; }

    BitString encode(std::string_view text) const override { return inner_.encode(text); }
    std::string decode(const BitString& bits) const override { return inner_.decode(bits); }

private:
    CharHuffmanCodec inner_{english_char_distribution()};
};

class ArithmeticCharCodec final : public Codec {
public:
    std::string_view name() const override { return kCodecNames[1]; }
    std::uint8_t id() const override { return kCodecIdArithmetic; }

    BitString encode(std::string_view text) const override {
        return serialize(ac_encode(text, model_));
    }
    std::string decode(const BitString& bits) const override {
        return ac_decode(parse_arithmetic_frame(bits), model_);
    }

private:
    FrequencyModel model_ = quantize_distribution(english_char_distribution());
};

class LzwCharCodec final : public Codec {
public:
    std::string_view name() const override { return kCodecNames[2]; }
    std::uint8_t id() const override { return kCodecIdLzw; }

    BitString encode(std::string_view text) const override { return pack(lzw_encode(text)); }
    std::string decode(const BitString& bits) const override {
        return lzw_decode(unpack_lzw_frame(bits));
    }
};

class AbbrevMessageCodec final : public Codec {
public:
    explicit AbbrevMessageCodec(MessageTable table) : table_(std::move(table)) {}

    std::string_view name() const override { return kCodecNames[3]; }
    std::uint8_t id() const override { return kCodecIdAbbrev; }

    BitString encode(std::string_view text) const override {
        return abbrev_encode(text, table_);
    }
    std::string decode(const BitString& bits) const override {
        return abbrev_decode(bits, table_);
    }

private:
    MessageTable table_;
};

class ProbabilityMessageCodec final : public Codec {
public:
    explicit ProbabilityMessageCodec(MessageTable table) : table_(std::move(table)) {}

    std::string_view name() const override { return kCodecNames[4]; }
    std::uint8_t id() const override { return kCodecIdProbability; }

    BitString encode(std::string_view text) const override {
        return prob_encode(text, table_);
    }
    std::string decode(const BitString& bits) const override {
        return prob_decode(bits, table_);
    }

private:
    MessageTable table_;
};

} // namespace

std::span<const std::string_view> codec_names() { return kCodecNames; }

std::unique_ptr<Codec> make_codec(std::string_view name, const MessageTable& table) {
    if (name == kCodecNames[0]) return std::make_unique<HuffmanCharCodec>();
    if (name == kCodecNames[1]) return std::make_unique<ArithmeticCharCodec>();
    if (name == kCodecNames[2]) return std::make_unique<LzwCharCodec>();
    if (name == kCodecNames[3]) return std::make_unique<AbbrevMessageCodec>(table);
    if (name == kCodecNames[4]) return std::make_unique<ProbabilityMessageCodec>(table);
    throw CodecError(ErrorKind::UnknownCodec,
                     "unknown codec \"" + std::string(name) + "\"");
}

std::unique_ptr<Codec> make_codec(std::uint8_t id, const MessageTable& table) {
    if (id >= 1 && id <= kCodecNames.size())
        return make_codec(kCodecNames[id - 1], table);
    throw CodecError(ErrorKind::UnknownCodec,
                     "unknown codec id " + std::to_string(id));
}

std::vector<std::unique_ptr<Codec>> make_all_codecs(const MessageTable& table) {
    std::vector<std::unique_ptr<Codec>> codecs;
    codecs.reserve(kCodecNames.size());
    for (std::string_view name : kCodecNames) codecs.push_back(make_codec(name, table));
    return codecs;
}

} // namespace bsm
