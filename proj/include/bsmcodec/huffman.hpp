#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsmcodec/bitio.hpp"
#include "bsmcodec/corpus.hpp"

namespace bsm {

// A prefix-free symbol -> codeword map. Symbols are indices into whatever
// alphabet the caller pairs the book with.
struct HuffmanCodebook {
    std::vector<BitString> codes;
    std::vector<unsigned> lengths;

    std::size_t size() const { return codes.size(); }
};

// Builds an optimal prefix code for the given positive weights.
//
// Construction is the two-queue method: leaves sorted ascending by
// (weight, symbol index), merged nodes queued in creation order, and ties
// between the queues resolved in favor of the merged node. Codewords are
// then reassigned canonically (sorted by length, then symbol index, codes
// in counting order), so identical weights always give identical books and
// encoder and decoder agree without transmitting the tree.
//
// Throws InvalidArgument for fewer than 2 symbols or a non-positive weight.
HuffmanCodebook build_huffman_code(std::span<const std::uint64_t> weights);

// Fixed character-level codec over the 27-symbol alphabet. The tree is
// built once from the distribution and reused for every message.
class CharHuffmanCodec {
public:
    explicit CharHuffmanCodec(const CharDistribution& dist);

    const HuffmanCodebook& codebook() const { return book_; }

    // Concatenates the per-symbol codewords in text order; empty text gives
    // an empty BitString. Throws OutOfAlphabet naming the offending
    // character and its position.
    BitString encode(std::string_view text) const;

    // Inverse of encode. A trailing partial codeword throws TruncatedStream.
    std::string decode(const BitString& bits) const;

private:
    HuffmanCodebook book_;
    // Flat decode trie; negative child = ~symbol, non-negative = node index.
    struct Node {
        int child[2] = {0, 0};
    };
    std::vector<Node> trie_;
};

} // namespace bsm
