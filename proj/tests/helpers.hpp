#pragma once

#include <optional>
#include <ostream>
#include <random>
#include <string>

#include "bsmcodec/error.hpp"

namespace bsm {

inline std::ostream& operator<<(std::ostream& os, ErrorKind kind) {
    return os << to_string(kind);
}

} // namespace bsm

namespace testutil {

// Runs fn and reports which CodecError kind it threw, if any.
template <class F>
std::optional<bsm::ErrorKind> error_kind_of(F&& fn) {
    try {
        fn();
    } catch (const bsm::CodecError& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::string random_alphabet_text(std::mt19937& rng, std::size_t len) {
    static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz ";
    std::uniform_int_distribution<int> pick(0, 26);
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[pick(rng)]);
    return s;
}

} // namespace testutil
