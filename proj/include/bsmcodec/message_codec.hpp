#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "bsmcodec/bitio.hpp"
#include "bsmcodec/corpus.hpp"
#include "bsmcodec/huffman.hpp"

namespace bsm {

// Message-level codecs: both sides agree on a MessageTable and transmit
// whole safety messages, not characters.

// Fixed 24-bit frame holding the three ASCII letters of the abbreviation.
BitString abbrev_encode(std::string_view message, const MessageTable& table);

// Inverse of abbrev_encode. Throws MalformedFrame unless the frame is
// exactly 24 bits and UnknownAbbreviation when the letters are not in the
// table.
std::string abbrev_decode(const BitString& bits, const MessageTable& table);

// Emits the table's variable-length codeword for the message. Shorter
// codewords belong to higher-priority messages, so urgency maps directly
// to airtime.
BitString prob_encode(std::string_view message, const MessageTable& table);

// Decodes a frame holding exactly one codeword. Trailing bits after the
// codeword raise MalformedFrame; running out of bits mid-codeword raises
// TruncatedStream; a path outside the codeword set raises UnknownCodeword.
std::string prob_decode(const BitString& bits, const MessageTable& table);

// Streaming variant: consumes one codeword from the cursor and leaves it
// positioned on the next bit.
std::string prob_decode_next(BitCursor& cur, const MessageTable& table);

// Derives the codeword lengths the table's codeword column realizes:
// a Huffman code over the message weights, built with the same two-queue
// discipline as the character codec. Exposed so tests and tooling can
// confirm the shipped codewords are cost-optimal for the shipped weights.
HuffmanCodebook rebuild_message_code(std::span<const std::uint64_t> weights);
HuffmanCodebook rebuild_message_code(const MessageTable& table);

} // namespace bsm
