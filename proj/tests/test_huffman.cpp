#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "bsmcodec/bitio.hpp"
#include "bsmcodec/corpus.hpp"
#include "bsmcodec/error.hpp"
#include "bsmcodec/huffman.hpp"
#include "expected_values.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bsm;
using testutil::error_kind_of;

namespace {

bool is_prefix(const BitString& a, const BitString& b) {
    if (a.size() >= b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.bit(i) != b.bit(i)) return false;
    return true;
}

std::uint64_t weighted_cost(std::span<const std::uint64_t> weights,
                            const HuffmanCodebook& book) {
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) cost += weights[i] * book.lengths[i];
    return cost;
}

} // namespace

TEST_CASE("small codes come out exact") {
    {
        std::vector<std::uint64_t> w{1, 1};
        HuffmanCodebook book = build_huffman_code(w);
        CHECK(book.lengths == std::vector<unsigned>{1, 1});
        CHECK(book.codes[0] == BitString::from_string("0"));
        CHECK(book.codes[1] == BitString::from_string("1"));
    }
    {
        // Three equal weights: one symbol gets the short code; the merged
        // pair outranks the remaining leaf at equal weight, so the leaf
        // processed last is the third one.
        std::vector<std::uint64_t> w{1, 1, 1};
        HuffmanCodebook book = build_huffman_code(w);
        CHECK(book.lengths == std::vector<unsigned>{2, 2, 1});
        CHECK(book.codes[2] == BitString::from_string("0"));
        CHECK(book.codes[0] == BitString::from_string("10"));
        CHECK(book.codes[1] == BitString::from_string("11"));
    }
    {
        std::vector<std::uint64_t> w{8, 4, 2, 1, 1};
        HuffmanCodebook book = build_huffman_code(w);
        CHECK(book.lengths == std::vector<unsigned>{1, 2, 3, 4, 4});
    }
}

TEST_CASE("build rejects degenerate inputs") {
    CHECK(error_kind_of([] {
              std::vector<std::uint64_t> w{5};
              build_huffman_code(w);
          }) == ErrorKind::InvalidArgument);
    CHECK(error_kind_of([] {
              std::vector<std::uint64_t> w{};
              build_huffman_code(w);
          }) == ErrorKind::InvalidArgument);
    CHECK(error_kind_of([] {
              std::vector<std::uint64_t> w{3, 0, 2};
              build_huffman_code(w);
          }) == ErrorKind::InvalidArgument);
}

TEST_CASE("random codes are optimal, prefix-free, Kraft-complete, deterministic") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size_pick(2, 8);
    std::uniform_int_distribution<std::uint64_t> weight_pick(1, 40);

    for (int round = 0; round < 200; ++round) {
        std::size_t n = static_cast<std::size_t>(size_pick(rng));
        std::vector<std::uint64_t> weights(n);
        for (auto& w : weights) w = weight_pick(rng);
        CAPTURE(round);

        HuffmanCodebook book = build_huffman_code(weights);
        REQUIRE(book.size() == n);

        // Codeword content matches the recorded lengths.
        for (std::size_t i = 0; i < n; ++i) CHECK(book.codes[i].size() == book.lengths[i]);

        // Cost equals the exhaustive-search optimum.
        std::uint64_t optimal =
            testoracle::min_prefix_cost(weights, static_cast<unsigned>(n - 1));
        CHECK(weighted_cost(weights, book) == optimal);

        // Prefix-free.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) {
                    CHECK_FALSE(is_prefix(book.codes[i], book.codes[j]));
                    if (i < j) CHECK(book.codes[i] != book.codes[j]);
                }

        // Huffman codes are complete: Kraft sum is exactly 1.
        unsigned max_len = *std::max_element(book.lengths.begin(), book.lengths.end());
        std::uint64_t kraft = 0;
        for (unsigned len : book.lengths) kraft += std::uint64_t{1} << (max_len - len);
        CHECK(kraft == std::uint64_t{1} << max_len);

        // Same weights, same book.
        HuffmanCodebook again = build_huffman_code(weights);
        CHECK(again.codes == book.codes);
    }
}

TEST_CASE("canonical order: shorter codes first, ties by symbol index") {
    std::vector<std::uint64_t> w{10, 1, 1, 10};
    HuffmanCodebook book = build_huffman_code(w);
    CHECK(book.lengths == std::vector<unsigned>{2, 3, 3, 1});
    CHECK(book.codes[3] == BitString::from_string("0"));
    CHECK(book.codes[0] == BitString::from_string("10"));
    CHECK(book.codes[1] == BitString::from_string("110"));
    CHECK(book.codes[2] == BitString::from_string("111"));
    // Equal lengths ascend with the symbol index.
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (book.lengths[i] == book.lengths[j])
                CHECK(book.codes[i].to_string() < book.codes[j].to_string());
}

TEST_CASE("character codebook matches the reference build") {
    CharHuffmanCodec codec(english_char_distribution());
    const HuffmanCodebook& book = codec.codebook();
    REQUIRE(book.size() == kAlphabetSize);
    for (int i = 0; i < static_cast<int>(kAlphabetSize); ++i) {
        CAPTURE(kAlphabet[static_cast<std::size_t>(i)]);
        CHECK(book.codes[static_cast<std::size_t>(i)].to_string() ==
              expected::kCharCodes[i]);
    }
}

TEST_CASE("character encodings match the reference bit strings") {
    CharHuffmanCodec codec(english_char_distribution());
    CHECK(codec.encode("left turn ahead").to_string() == expected::kHuffLeftTurnAhead);
    CHECK(codec.encode("leave way for the ambulance").to_string() ==
          expected::kHuffLeaveWay);
    CHECK(codec.encode("road condition not good").to_string() ==
          expected::kHuffRoadCondition);

    CHECK(codec.decode(BitString::from_string(expected::kHuffLeftTurnAhead)) ==
          "left turn ahead");
}

TEST_CASE("character codec round-trips arbitrary alphabet text") {
    CharHuffmanCodec codec(english_char_distribution());
    CHECK(codec.encode("").empty());
    CHECK(codec.decode(BitString{}) == "");

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> len_pick(0, 64);
    for (int round = 0; round < 300; ++round) {
        std::string text = testutil::random_alphabet_text(rng, len_pick(rng));
        CAPTURE(text);
        CHECK(codec.decode(codec.encode(text)) == text);
    }
}

TEST_CASE("character codec rejects foreign characters and torn bits") {
    CharHuffmanCodec codec(english_char_distribution());
    auto kind = error_kind_of([&] { codec.encode("left Turn"); });
    CHECK(kind == ErrorKind::OutOfAlphabet);

    BitString bits = codec.encode("queue");
    BitString torn;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) torn.push_back(bits.bit(i));
    CHECK(error_kind_of([&] { codec.decode(torn); }) == ErrorKind::TruncatedStream);
}

TEST_CASE("mean code length sits within one bit of the entropy") {
    CharHuffmanCodec codec(english_char_distribution());
    const CharDistribution& dist = english_char_distribution();

    // The published column sums to 1.000001; both statistics are over the
    // true probabilities.
    std::vector<double> probs = testoracle::normalized(dist.probs);
    double h = testoracle::entropy_bits(probs);
    CHECK(h == doctest::Approx(expected::kCharEntropyBits).epsilon(1e-12));

    double mean_len = 0.0;
    for (std::size_t i = 0; i < kAlphabetSize; ++i)
        mean_len += probs[i] * codec.codebook().lengths[i];
    CHECK(mean_len == doctest::Approx(expected::kCharMeanCodeLength).epsilon(1e-12));
    CHECK(mean_len >= h);
    CHECK(mean_len < h + 1.0);
}
