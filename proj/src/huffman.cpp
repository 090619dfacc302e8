#include "bsmcodec/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

std::vector<unsigned> code_lengths(std::span<const std::uint64_t> weights)
{
    const std::size_t n = weights.size();

    struct Node {
        std::uint64_t weight;
        int parent = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n - 1);
    for (std::uint64_t w : weights)
        nodes.push_back({w});

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(weights[static_cast<std::size_t>(a)], a)
               < std::tie(weights[static_cast<std::size_t>(b)], b);
    });

    std::deque<int> leaves(order.begin(), order.end());
    std::deque<int> merged; // creation order, weights non-decreasing

    auto take = [&]() {
        int pick;
        if (leaves.empty())
            pick = merged.front(), merged.pop_front();
        else if (merged.empty())
            pick = leaves.front(), leaves.pop_front();
        else if (nodes[static_cast<std::size_t>(merged.front())].weight
                 <= nodes[static_cast<std::size_t>(leaves.front())].weight)
            pick = merged.front(), merged.pop_front();
        else
            pick = leaves.front(), leaves.pop_front();
        return pick;
    };

    while (leaves.size() + merged.size() >= 2) {
        int a = take();
        int b = take();
        int idx = static_cast<int>(nodes.size());
        nodes.push_back({nodes[static_cast<std::size_t>(a)].weight
                         + nodes[static_cast<std::size_t>(b)].weight});
        nodes[static_cast<std::size_t>(a)].parent = idx;
        nodes[static_cast<std::size_t>(b)].parent = idx;
        merged.push_back(idx);
    }

    std::vector<unsigned> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned depth = 0;
        for (int j = nodes[i].parent; j != -1; j = nodes[static_cast<std::size_t>(j)].parent)
            ++depth;
        lengths[i] = depth;
    }
    return lengths;
}

} // namespace

HuffmanCodebook build_huffman_code(std::span<const std::uint64_t> weights)
{
    if (weights.size() < 2)
        throw CodecError(ErrorKind::InvalidArgument, "need at least 2 symbols, got "
                                                         + std::to_string(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == 0)
            throw CodecError(ErrorKind::InvalidArgument,
                             "weight of symbol " + std::to_string(i) + " must be positive");

    HuffmanCodebook book;
    book.lengths = code_lengths(weights);
    book.codes.resize(weights.size());

    // Canonical assignment: symbols sorted by (length, index), codes in
    // counting order, left-shifted whenever the length steps up.
    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(book.lengths[static_cast<std::size_t>(a)], a)
               < std::tie(book.lengths[static_cast<std::size_t>(b)], b);
    });

    std::uint64_t code = 0;
    unsigned prev_len = book.lengths[static_cast<std::size_t>(order.front())];
    for (int s : order) {
        unsigned len = book.lengths[static_cast<std::size_t>(s)];
        code <<= (len - prev_len);
        prev_len = len;
        BitString bits;
        bits.append_uint(code, len);
        book.codes[static_cast<std::size_t>(s)] = std::move(bits);
        ++code;
    }
    return book;
}

CharHuffmanCodec::CharHuffmanCodec(const CharDistribution& dist)
{
    // The frequency column carries six decimals, so scaling by 1e6 gives
    // exact integer weights; any distribution quantizes to at least 1.
    std::vector<std::uint64_t> weights(kAlphabetSize);
    for (std::size_t i = 0; i < kAlphabetSize; ++i)
        weights[i] = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::llround(dist.probs[i] * 1e6)));
    book_ = build_huffman_code(weights);

    trie_.emplace_back();
    for (std::size_t sym = 0; sym < book_.size(); ++sym) {
        int node = 0;
        const BitString& code = book_.codes[sym];
        for (std::size_t i = 0; i < code.size(); ++i) {
            int branch = code.bit(i) ? 1 : 0;
            if (i + 1 == code.size()) {
                trie_[static_cast<std::size_t>(node)].child[branch] = ~static_cast<int>(sym);
            } else {
                int next = trie_[static_cast<std::size_t>(node)].child[branch];
                if (next == 0) {
                    next = static_cast<int>(trie_.size());
                    trie_[static_cast<std::size_t>(node)].child[branch] = next;
                    trie_.emplace_back();
                }
                node = next;
            }
        }
    }
}

BitString CharHuffmanCodec::encode(std::string_view text) const
{
    BitString out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        int idx = alphabet_index(text[i]);
        if (idx < 0)
            throw CodecError(ErrorKind::OutOfAlphabet,
                             std::string("'") + text[i] + "' at position " + std::to_string(i));
        out.append(book_.codes[static_cast<std::size_t>(idx)]);
    }
    return out;
}

std::string CharHuffmanCodec::decode(const BitString& bits) const
{
    std::string out;
    int node = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        node = trie_[static_cast<std::size_t>(node)].child[bits.bit(i) ? 1 : 0];
        if (node < 0) {
            out.push_back(kAlphabet[static_cast<std::size_t>(~node)]);
            node = 0;
        }
    }
    if (node != 0)
        throw CodecError(ErrorKind::TruncatedStream, "trailing partial codeword");
    return out;
}

} // namespace bsm
