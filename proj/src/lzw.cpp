#include "bsmcodec/lzw.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "bsmcodec/corpus.hpp"
#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

unsigned width_for_dict(std::size_t dict_size) {
    auto needed = static_cast<unsigned>(std::bit_width(dict_size - 1));
    return needed < kLzwMinWidth ? kLzwMinWidth : needed;
}

} // namespace

LzwFrame lzw_encode(std::string_view text) {
    if (text.empty())
        throw CodecError(ErrorKind::InvalidArgument, "cannot encode an empty text");

    std::unordered_map<std::string, std::uint16_t> dict;
    dict.reserve(kLzwMaxDictSize);
    for (int i = 0; i < static_cast<int>(kAlphabetSize); ++i)
        dict.emplace(std::string(1, kAlphabet[i]), static_cast<std::uint16_t>(i));

    LzwFrame frame;
    std::string run;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (alphabet_index(c) < 0)
            throw CodecError(ErrorKind::OutOfAlphabet,
                             std::string("character '") + c + "' at position " +
                                 std::to_string(pos) +
                                 " is outside the lowercase-plus-space alphabet");
        run.push_back(c);
        if (dict.count(run)) continue;
        run.pop_back();
        frame.codes.push_back(dict.at(run));
        if (dict.size() < kLzwMaxDictSize) {
            run.push_back(c);
            dict.emplace(run, static_cast<std::uint16_t>(dict.size()));
            run.pop_back();
        }
        run.assign(1, c);
    }
    frame.codes.push_back(dict.at(run));
    frame.code_width = width_for_dict(dict.size());
    return frame;
}

std::string lzw_decode(const LzwFrame& frame) {
    if (frame.codes.empty())
        throw CodecError(ErrorKind::MalformedFrame, "frame carries no codes");

    std::vector<std::string> dict;
    dict.reserve(kLzwMaxDictSize);
    for (int i = 0; i < static_cast<int>(kAlphabetSize); ++i)
        dict.emplace_back(1, kAlphabet[i]);

    std::string out;
    std::string prev;
    for (std::uint16_t code : frame.codes) {
        std::string entry;
        if (code < dict.size()) {
            entry = dict[code];
        } else if (code == dict.size() && !prev.empty() && dict.size() < kLzwMaxDictSize) {
            // The run-of-runs case: the encoder used an entry it had only
            // just created, which must be prev plus its own first character.
            entry = prev + prev.front();
        } else {
            throw CodecError(ErrorKind::MalformedFrame,
                             "code " + std::to_string(code) +
                                 " does not address a dictionary entry");
        }
        if (!prev.empty() && dict.size() < kLzwMaxDictSize)
            dict.push_back(prev + entry.front());
        out += entry;
        prev = std::move(entry);
    }
    return out;
}

BitString pack(const LzwFrame& frame) {
    if (frame.code_width < kLzwMinWidth || frame.code_width > kLzwMaxWidth)
        throw CodecError(ErrorKind::InvalidArgument,
                         "code width " + std::to_string(frame.code_width) +
                             " outside the packable range");
    BitString bits;
    bits.append_uint(frame.code_width, 4);
    for (std::uint16_t code : frame.codes) {
        if (code >= (std::uint32_t{1} << frame.code_width))
            throw CodecError(ErrorKind::InvalidArgument,
                             "code " + std::to_string(code) +
                                 " does not fit the declared width");
        bits.append_uint(code, frame.code_width);
    }
    return bits;
}

LzwFrame unpack_lzw_frame(const BitString& bits) {
    if (bits.size() < 4)
        throw CodecError(ErrorKind::TruncatedStream,
                         "frame shorter than its 4-bit width header");
    BitCursor cur(bits);
    LzwFrame frame;
    frame.code_width = static_cast<unsigned>(cur.read_uint(4));
    if (frame.code_width < kLzwMinWidth || frame.code_width > kLzwMaxWidth)
        throw CodecError(ErrorKind::MalformedFrame,
                         "declared code width " + std::to_string(frame.code_width) +
                             " outside the valid range");
    if (cur.remaining() % frame.code_width != 0)
        throw CodecError(ErrorKind::TruncatedStream,
                         "code section does not divide into whole codes");
    while (cur.remaining() > 0)
        frame.codes.push_back(static_cast<std::uint16_t>(cur.read_uint(frame.code_width)));
    return frame;
}

} // namespace bsm
