#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsmcodec/codec.hpp"
#include "bsmcodec/corpus.hpp"

namespace bsm {

// Uncompressed baseline: plain 8-bit characters.
inline constexpr std::uint64_t kBitsPerPlainChar = 8;

// uncompressed / compressed, both in bits. Throws UndefinedRatio when
// compressed_bits is zero.
double compression_ratio(std::uint64_t uncompressed_bits, std::uint64_t compressed_bits);

// Shannon entropy of a character distribution in bits per character. The
// distribution is renormalized to sum exactly 1 first, since the published
// frequency column sums to 1.000001.
double char_entropy(const CharDistribution& dist);

struct SizeRecord {
    std::uint64_t uncompressed_bits = 0;
    std::uint64_t compressed_bits = 0;
    double ratio = 0.0;
};

// Mean wall-clock cost of one operation, in microseconds.
struct TimingRecord {
    double encode_us = 0.0;
    double decode_us = 0.0;
};

struct Measurement {
    SizeRecord size;
    TimingRecord timing;
    // Ratio earned per millisecond of codec work (encode plus decode):
    // a combined figure of merit for ranking codecs that trade compression
    // against speed.
    double ratio_per_ms = 0.0;
};

// Runs one untimed warm-up round-trip, then times reps encodes and reps
// decodes as two blocks, checking every decode against the input text.
// Throws InvalidArgument for reps == 0 and CodecFault when a decode does
// not reproduce the input.
Measurement measure_codec(const Codec& codec, std::string_view text, unsigned reps);

struct BenchRow {
    std::string codec;
    std::string message;
    std::string priority; // empty when the text is not a table message
    Measurement measurement;
    std::string error; // nonempty marks a failed row; numbers are then meaningless
};

struct BenchReport {
    std::vector<BenchRow> rows;

    bool has_errors() const;
};

// Crosses the selected codecs with either every table message or, when
// message_override is set, just that text. A codec that fails on a text
// produces an error row instead of aborting the run; an unknown codec
// name still throws, that is a usage error.
BenchReport run_benchmark(const MessageTable& table,
                          std::span<const std::string> codecs,
                          unsigned reps,
                          std::optional<std::string_view> message_override = {});

// CSV with the fixed header codec,message,priority,uncompressed_bits,
// compressed_bits,ratio,encode_us,decode_us,ratio_per_ms. Error rows keep
// their identity columns and leave every numeric cell empty.
void write_csv(std::ostream& out, const BenchReport& report);

// One-line description of compiler and build flavor, for annotating
// timing-sensitive output.
std::string environment_summary();

} // namespace bsm
