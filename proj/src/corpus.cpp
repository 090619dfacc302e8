#include "bsmcodec/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

#include "bsmcodec/error.hpp"

namespace bsm {

int alphabet_index(char c)
{
    if (c >= 'a' && c <= 'z')
        return c - 'a';
    if (c == ' ')
        return 26;
    return -1;
}

double CharDistribution::prob(char c) const
{
    int idx = alphabet_index(c);
    if (idx < 0)
        throw CodecError(ErrorKind::OutOfAlphabet, std::string("'") + c + "'");
    return probs[static_cast<std::size_t>(idx)];
}

double CharDistribution::sum() const
{
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

const CharDistribution& english_char_distribution()
{
    static const CharDistribution dist{{
        0.065174, // a
        0.012425, // b
        0.021734, // c
        0.034984, // d
        0.104144, // e
        0.019788, // f
        0.015861, // g
        0.049289, // h
        0.055809, // i
        0.000903, // j
        0.005053, // k
        0.033149, // l
        0.020212, // m
        0.056451, // n
        0.059630, // o
        0.013765, // p
        0.000861, // q
        0.049756, // r
        0.051576, // s
        0.072936, // t
        0.022513, // u
        0.008290, // v
        0.017129, // w
        0.001369, // x
        0.014598, // y
        0.000784, // z
        0.191818, // space
    }};
    return dist;
}

std::string_view to_string(Priority p)
{
    switch (p) {
    case Priority::P1: return "P1";
    case Priority::P2: return "P2";
    case Priority::P3: return "P3";
    }
    return "P?";
}

std::optional<Priority> parse_priority(std::string_view token)
{
    if (token == "P1")
        return Priority::P1;
    if (token == "P2")
        return Priority::P2;
    if (token == "P3")
        return Priority::P3;
    return std::nullopt;
}

MessageTable::MessageTable(std::vector<MessageEntry> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        by_message_.emplace(entries_[i].message, i);
        by_abbreviation_.emplace(entries_[i].abbreviation, i);
    }
}

const MessageEntry* MessageTable::find_message(std::string_view message) const
{
    auto it = by_message_.find(std::string(message));
    return it == by_message_.end() ? nullptr : &entries_[it->second];
}

const MessageEntry* MessageTable::find_abbreviation(std::string_view abbreviation) const
{
    auto it = by_abbreviation_.find(std::string(abbreviation));
    return it == by_abbreviation_.end() ? nullptr : &entries_[it->second];
}

namespace {

MessageEntry make_entry(std::string message, std::string abbrev, Priority priority,
                        std::uint32_t numerator, std::string_view codeword)
{
    return MessageEntry{std::move(message), std::move(abbrev), priority,
                        Weight{numerator, 1075}, BitString::from_string(codeword)};
}

std::vector<MessageEntry> builtin_entries()
{
    using enum Priority;
    std::vector<MessageEntry> rows;
    rows.push_back(make_entry("left turn ahead", "LTA", P2, 50, "00111"));
    rows.push_back(make_entry("right turn ahead", "RTA", P2, 50, "00110"));
    rows.push_back(make_entry("emergency ahead", "EGA", P1, 100, "101"));
    rows.push_back(make_entry("emergency braking", "EGB", P1, 100, "100"));
    rows.push_back(make_entry("brakes applied", "BKA", P1, 100, "111"));
    rows.push_back(make_entry("lane change alert", "LCA", P2, 50, "00001"));
    rows.push_back(make_entry("queue warning", "QEW", P3, 25, "001001"));
    rows.push_back(make_entry("hump warning", "HMW", P3, 25, "001000"));
    rows.push_back(make_entry("pedestrian crossing ahead", "PCA", P1, 100, "110"));
    rows.push_back(make_entry("work in progress ahead", "WPA", P3, 25, "001011"));
    rows.push_back(make_entry("leave way for the ambulance", "LWA", P1, 100, "011"));
    rows.push_back(make_entry("intersection ahead", "ISA", P2, 50, "00000"));
    rows.push_back(make_entry("taking left turn", "TLT", P2, 50, "00011"));
    rows.push_back(make_entry("taking right turn", "TRT", P2, 50, "00010"));
    rows.push_back(make_entry("road condition not good", "RNG", P3, 25, "001010"));
    rows.push_back(make_entry("allow overtake", "AWO", P3, 25, "010101"));
    rows.push_back(make_entry("allowed overtake", "AEO", P3, 25, "010100"));
    rows.push_back(make_entry("searching for parking", "SFP", P3, 25, "01011"));
    rows.push_back(make_entry("taking u turn", "TUT", P2, 50, "01001"));
    rows.push_back(make_entry("vehicle turning in front", "VTF", P2, 50, "01000"));
    return rows;
}

bool is_prefix_of(const BitString& a, const BitString& b)
{
    if (a.size() >= b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.bit(i) != b.bit(i))
            return false;
    return true;
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, const std::string& what)
{
    std::ostringstream msg;
    msg << source << ":" << line << ": " << what;
    throw CodecError(ErrorKind::TableParse, msg.str());
}

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

} // namespace

const MessageTable& MessageTable::builtin()
{
    static const MessageTable table(builtin_entries());
    return table;
}

MessageTable MessageTable::parse(std::istream& in, std::string_view source_name)
{
    std::vector<MessageEntry> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        auto fields = split_tabs(line);
        if (fields.size() != 5)
            parse_fail(source_name, line_no,
                       "expected 5 tab-separated fields, got " + std::to_string(fields.size()));

        MessageEntry entry;
        entry.message = fields[0];
        if (entry.message.empty())
            parse_fail(source_name, line_no, "empty message");

        entry.abbreviation = fields[1];
        if (entry.abbreviation.size() != 3
            || !std::all_of(entry.abbreviation.begin(), entry.abbreviation.end(),
                            [](char c) { return c >= 'A' && c <= 'Z'; }))
            parse_fail(source_name, line_no,
                       "abbreviation must be exactly 3 uppercase letters: \"" + fields[1] + "\"");

        auto priority = parse_priority(fields[2]);
        if (!priority)
            parse_fail(source_name, line_no, "bad priority token \"" + fields[2] + "\"");
        entry.priority = *priority;

        unsigned long num = 0, den = 0;
        char slash = 0;
        std::istringstream weight(fields[3]);
        if (!(weight >> num >> slash >> den) || slash != '/' || !weight.eof() || num == 0
            || den == 0)
            parse_fail(source_name, line_no, "bad weight \"" + fields[3] + "\" (want num/den)");
        entry.weight = Weight{static_cast<std::uint32_t>(num), static_cast<std::uint32_t>(den)};

        if (fields[4].empty() || fields[4].size() > 32
            || fields[4].find_first_not_of("01") != std::string::npos)
            parse_fail(source_name, line_no, "bad codeword \"" + fields[4] + "\" (want 1..32 of 0/1)");
        entry.codeword = BitString::from_string(fields[4]);

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].message == entry.message)
                parse_fail(source_name, line_no, "duplicate message \"" + entry.message + "\"");
            if (rows[i].abbreviation == entry.abbreviation)
                parse_fail(source_name, line_no,
                           "duplicate abbreviation \"" + entry.abbreviation + "\"");
            if (rows[i].codeword == entry.codeword)
                parse_fail(source_name, line_no, "duplicate codeword " + entry.codeword.to_string());
            if (is_prefix_of(rows[i].codeword, entry.codeword)
                || is_prefix_of(entry.codeword, rows[i].codeword))
                parse_fail(source_name, line_no,
                           "codeword " + entry.codeword.to_string()
                               + " breaks the prefix property against row "
                               + std::to_string(i + 1));
        }
        rows.push_back(std::move(entry));
    }
    return MessageTable(std::move(rows));
}

MessageTable MessageTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw CodecError(ErrorKind::TableParse, "cannot open " + path.string());
    return parse(in, path.string());
}

bool ValidationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const ValidationReport::Check* ValidationReport::find(std::string_view name) const
{
    for (const auto& check : checks)
        if (check.name == name)
            return &check;
    return nullptr;
}

ValidationReport validate_message_table(const MessageTable& table)
{
    ValidationReport report;
    auto entries = table.entries();

    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < entries.size() && ok; ++i)
            for (std::size_t j = 0; j < entries.size() && ok; ++j)
                if (i != j && is_prefix_of(entries[i].codeword, entries[j].codeword)) {
                    ok = false;
                    detail = entries[i].codeword.to_string() + " is a prefix of "
                             + entries[j].codeword.to_string();
                }
        report.checks.push_back({"prefix-free", ok, ok ? "no codeword prefixes another" : detail});
    }

    {
        // Exact Kraft sum over a 2^max_len common denominator.
        std::size_t max_len = 0;
        for (const auto& e : entries)
            max_len = std::max(max_len, e.codeword.size());
        bool ok = false;
        std::string detail;
        if (max_len > 62) {
            detail = "codeword longer than 62 bits";
        } else if (max_len == 0) {
            detail = "no codewords";
        } else {
            std::uint64_t denom = 1ull << max_len;
            std::uint64_t sum = 0;
            for (const auto& e : entries)
                sum += 1ull << (max_len - e.codeword.size());
            ok = sum == denom;
            std::ostringstream os;
            os << "sum = " << sum << "/" << denom;
            detail = os.str();
        }
        report.checks.push_back({"kraft-sum", ok, detail});
    }

    {
        bool ok = true;
        std::string detail = "all abbreviations distinct";
        for (std::size_t i = 0; i < entries.size() && ok; ++i)
            for (std::size_t j = i + 1; j < entries.size() && ok; ++j)
                if (entries[i].abbreviation == entries[j].abbreviation) {
                    ok = false;
                    detail = "\"" + entries[i].abbreviation + "\" appears twice";
                }
        report.checks.push_back({"abbreviation-unique", ok, detail});
    }

    {
        bool ok = true;
        std::string detail = "all messages within the 27-symbol alphabet";
        for (const auto& e : entries) {
            for (char c : e.message)
                if (alphabet_index(c) < 0) {
                    ok = false;
                    detail = "\"" + e.message + "\" contains '" + c + "'";
                    break;
                }
            if (!ok)
                break;
        }
        report.checks.push_back({"alphabet-closure", ok, detail});
    }

    {
        // Shared denominator, numerators summing to it, and equal numerators
        // per priority tier ordered P1 > P2 > P3.
        bool ok = !entries.empty();
        std::string detail;
        std::uint64_t num_sum = 0;
        std::array<std::uint32_t, 3> tier{0, 0, 0};
        for (const auto& e : entries) {
            if (e.weight.denominator != entries.front().weight.denominator) {
                ok = false;
                detail = "mixed denominators";
                break;
            }
            if (e.weight.numerator == 0) {
                ok = false;
                detail = "zero weight for \"" + e.message + "\"";
                break;
            }
            num_sum += e.weight.numerator;
            auto t = static_cast<std::size_t>(e.priority) - 1;
            if (tier[t] == 0)
                tier[t] = e.weight.numerator;
            else if (tier[t] != e.weight.numerator) {
                ok = false;
                detail = "unequal weights within " + std::string(to_string(e.priority));
                break;
            }
        }
        if (ok && num_sum != entries.front().weight.denominator) {
            ok = false;
            std::ostringstream os;
            os << "numerators sum to " << num_sum << ", denominator is "
               << entries.front().weight.denominator;
            detail = os.str();
        }
        if (ok) {
            for (std::size_t t = 0; t + 1 < tier.size(); ++t)
                if (tier[t] != 0 && tier[t + 1] != 0 && tier[t] <= tier[t + 1]) {
                    ok = false;
                    detail = "priority tiers not strictly decreasing in weight";
                }
        }
        if (ok)
            detail = "weights consistent with priorities";
        report.checks.push_back({"weight-consistency", ok, detail});
    }

    return report;
}

} // namespace bsm
