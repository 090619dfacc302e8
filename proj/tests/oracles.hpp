#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Self-contained reference implementations used to check the library from
// the outside. Nothing here includes or reuses library code.

namespace testoracle {

// Shannon entropy in bits, direct -sum(p log2 p) over nonzero entries.
double entropy_bits(std::span<const double> probs);

// Rescales a weight vector to a probability distribution summing to 1.
std::vector<double> normalized(std::span<const double> probs);

// Minimum of sum(weight_i * length_i) over every prefix-free code for the
// given weights, found by exhaustive search over nondecreasing length
// vectors satisfying the Kraft inequality, with lengths capped at max_len.
// Any optimal prefix code for n symbols can be realized with lengths at
// most n - 1, so max_len = n - 1 makes the search exact.
std::uint64_t min_prefix_cost(std::vector<std::uint64_t> weights, unsigned max_len);

// Classic dictionary coder over the 27-symbol lowercase-plus-space
// alphabet, dictionary growth stopping at 4096 entries. dict_out, when
// given, receives the final dictionary strings in index order.
std::vector<std::uint16_t> lzw_encode_codes(std::string_view text,
                                            std::vector<std::string>* dict_out = nullptr);
std::string lzw_decode_codes(std::span<const std::uint16_t> codes,
                             std::vector<std::string>* dict_out = nullptr);

} // namespace testoracle
