#include "bsmcodec/message_codec.hpp"

#include <vector>

#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

const MessageEntry& require_message(std::string_view message, const MessageTable& table) {
    const MessageEntry* entry = table.find_message(message);
    if (!entry)
        throw CodecError(ErrorKind::UnknownMessage,
                         "message \"" + std::string(message) + "\" is not in the table");
    return *entry;
}

} // namespace

BitString abbrev_encode(std::string_view message, const MessageTable& table) {
    const MessageEntry& entry = require_message(message, table);
    BitString bits;
    for (char c : entry.abbreviation)
        bits.append_uint(static_cast<unsigned char>(c), 8);
    return bits;
}

std::string abbrev_decode(const BitString& bits, const MessageTable& table) {
    if (bits.size() != 24)
        throw CodecError(ErrorKind::MalformedFrame,
                         "abbreviation frame must be exactly 24 bits, got " +
                             std::to_string(bits.size()));
    BitCursor cur(bits);
    std::string abbrev;
    for (int i = 0; i < 3; ++i)
        abbrev.push_back(static_cast<char>(cur.read_uint(8)));
    const MessageEntry* entry = table.find_abbreviation(abbrev);
    if (!entry)
        throw CodecError(ErrorKind::UnknownAbbreviation,
                         "abbreviation \"" + abbrev + "\" is not in the table");
    return entry->message;
}

BitString prob_encode(std::string_view message, const MessageTable& table) {
    return require_message(message, table).codeword;
}

std::string prob_decode_next(BitCursor& cur, const MessageTable& table) {
    std::size_t max_len = 0;
    for (const MessageEntry& entry : table.entries())
        if (entry.codeword.size() > max_len) max_len = entry.codeword.size();

    BitString acc;
    while (acc.size() < max_len) {
        acc.push_back(cur.read_bit());
        for (const MessageEntry& entry : table.entries())
            if (entry.codeword == acc) return entry.message;
    }
    throw CodecError(ErrorKind::UnknownCodeword,
                     "bit pattern " + acc.to_string() + " matches no codeword");
}

std::string prob_decode(const BitString& bits, const MessageTable& table) {
    BitCursor cur(bits);
    std::string message;
    try {
        message = prob_decode_next(cur, table);
    } catch (const CodecError& err) {
        if (err.kind() == ErrorKind::TruncatedStream)
            throw CodecError(ErrorKind::TruncatedStream,
                             "frame ends inside a codeword");
        throw;
    }
    if (cur.remaining() > 0)
        throw CodecError(ErrorKind::MalformedFrame,
                         std::to_string(cur.remaining()) +
                             " trailing bits after the codeword");
    return message;
}

HuffmanCodebook rebuild_message_code(std::span<const std::uint64_t> weights) {
    return build_huffman_code(weights);
}

HuffmanCodebook rebuild_message_code(const MessageTable& table) {
    std::vector<std::uint64_t> weights;
    weights.reserve(table.size());
    for (const MessageEntry& entry : table.entries())
        weights.push_back(entry.weight.numerator);
    return rebuild_message_code(weights);
}

} // namespace bsm
