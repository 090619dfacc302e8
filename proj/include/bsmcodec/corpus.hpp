#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bsmcodec/bitio.hpp"

namespace bsm {

// The 27-symbol message alphabet: lowercase letters then space.
inline constexpr std::size_t kAlphabetSize = 27;
inline constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz ";

// Index of `c` in the alphabet, or -1.
int alphabet_index(char c);

// Per-character occurrence probabilities over the 27-symbol alphabet.
struct CharDistribution {
    std::array<double, kAlphabetSize> probs;

    double prob(char c) const;
    double sum() const;
};

// Published frequencies of lowercase English letters and space, used as the
// fixed model for the character-level codecs. The raw column sums to
// 1.000001; callers that need a true probability renormalize.
const CharDistribution& english_char_distribution();

enum class Priority : std::uint8_t { P1 = 1, P2 = 2, P3 = 3 };

std::string_view to_string(Priority p);
std::optional<Priority> parse_priority(std::string_view token);

// Exact rational message weight (e.g. 50/1075).
struct Weight {
    std::uint32_t numerator = 0;
    std::uint32_t denominator = 1;

    friend bool operator==(const Weight&, const Weight&) = default;
};

struct MessageEntry {
    std::string message;      // lowercase text over kAlphabet
    std::string abbreviation; // exactly 3 uppercase ASCII letters
    Priority priority = Priority::P3;
    Weight weight;
    BitString codeword;
};

// The shared safety-message codebook. Both peers hold the same table; the
// codeword column is normative data, not a computed artifact, so decode
// interoperability never depends on how a Huffman tie was broken.
class MessageTable {
public:
    explicit MessageTable(std::vector<MessageEntry> entries);

    // The built-in 20-message table.
    static const MessageTable& builtin();

    // Parses the line-oriented table format: one record per line, fields
    // separated by a single tab (message, abbreviation, priority, weight,
    // codeword), '#' starting a comment line. Throws TableParse naming the
    // offending line on schema violations, duplicates, bad priority tokens
    // and non-prefix-free codeword sets.
    static MessageTable parse(std::istream& in, std::string_view source_name = "<stream>");
    static MessageTable load(const std::filesystem::path& path);

    std::span<const MessageEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const MessageEntry* find_message(std::string_view message) const;
    const MessageEntry* find_abbreviation(std::string_view abbreviation) const;

private:
    std::vector<MessageEntry> entries_;
    std::unordered_map<std::string, std::size_t> by_message_;
    std::unordered_map<std::string, std::size_t> by_abbreviation_;
};

struct ValidationReport {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    std::vector<Check> checks;

    bool all_passed() const;
    const Check* find(std::string_view name) const;
};

// Checks the structural consequences the codebook construction relies on:
// prefix-freeness, Kraft sum exactly 1, abbreviation uniqueness, alphabet
// closure of the message texts, and weight/priority consistency.
ValidationReport validate_message_table(const MessageTable& table);

} // namespace bsm
