#include "bsmcodec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bsmcodec/error.hpp"

namespace bsm {

namespace {

using Clock = std::chrono::steady_clock;

double block_us(Clock::time_point begin, Clock::time_point end, unsigned reps) {
    std::chrono::duration<double, std::micro> span = end - begin;
    return span.count() / reps;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        quoted.push_back(c);
        if (c == '"') quoted.push_back('"');
    }
    quoted.push_back('"');
    return quoted;
}

} // namespace

double compression_ratio(std::uint64_t uncompressed_bits, std::uint64_t compressed_bits) {
    if (compressed_bits == 0)
        throw CodecError(ErrorKind::UndefinedRatio,
                         "compression ratio undefined for a zero-bit output");
    return static_cast<double>(uncompressed_bits) / static_cast<double>(compressed_bits);
}

double char_entropy(const CharDistribution& dist) {
    // The published frequency column carries a rounding artifact (it sums
    // to 1.000001), so fold the sum back out before taking logs.
    double s = dist.sum();
    double h = 0.0;
    for (double p : dist.probs)
        if (p > 0.0) h -= (p / s) * std::log2(p / s);
    return h;
}

Measurement measure_codec(const Codec& codec, std::string_view text, unsigned reps) {
    if (reps == 0)
        throw CodecError(ErrorKind::InvalidArgument, "reps must be positive");

    // Warm-up round trip, untimed; also the output everything is checked
    // against.
    BitString encoded = codec.encode(text);
    std::string decoded = codec.decode(encoded);
    if (decoded != text)
        throw CodecError(ErrorKind::CodecFault,
                         std::string(codec.name()) + " round trip altered the text");

    Measurement m;
    m.size.uncompressed_bits = kBitsPerPlainChar * text.size();
    m.size.compressed_bits = encoded.size();
    m.size.ratio = compression_ratio(m.size.uncompressed_bits, m.size.compressed_bits);

    std::uint64_t sink = 0;
    auto t0 = Clock::now();
    for (unsigned i = 0; i < reps; ++i) {
        BitString out = codec.encode(text);
        sink += out.size();
    }
    auto t1 = Clock::now();
    m.timing.encode_us = block_us(t0, t1, reps);
    if (sink != static_cast<std::uint64_t>(encoded.size()) * reps)
        throw CodecError(ErrorKind::CodecFault,
                         std::string(codec.name()) + " produced unstable output sizes");

    auto t2 = Clock::now();
    for (unsigned i = 0; i < reps; ++i) {
        std::string out = codec.decode(encoded);
        if (out != text)
            throw CodecError(ErrorKind::CodecFault,
                             std::string(codec.name()) + " round trip altered the text");
    }
    auto t3 = Clock::now();
    m.timing.decode_us = block_us(t2, t3, reps);

    double total_ms = (m.timing.encode_us + m.timing.decode_us) / 1000.0;
    m.ratio_per_ms = total_ms > 0.0 ? m.size.ratio / total_ms
                                    : std::numeric_limits<double>::infinity();
    return m;
}

bool BenchReport::has_errors() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const BenchRow& row) { return !row.error.empty(); });
}

BenchReport run_benchmark(const MessageTable& table,
                          std::span<const std::string> codecs,
                          unsigned reps,
                          std::optional<std::string_view> message_override) {
    if (reps == 0)
        throw CodecError(ErrorKind::InvalidArgument, "reps must be positive");

    std::vector<std::unique_ptr<Codec>> instances;
    instances.reserve(codecs.size());
    for (const std::string& name : codecs)
        instances.push_back(make_codec(name, table)); // UnknownCodec propagates

    std::vector<std::string> texts;
    if (message_override) {
        texts.emplace_back(*message_override);
    } else {
        for (const MessageEntry& entry : table.entries()) texts.push_back(entry.message);
    }

    BenchReport report;
    for (const auto& codec : instances) {
        for (const std::string& text : texts) {
            BenchRow row;
            row.codec = codec->name();
            row.message = text;
            if (const MessageEntry* entry = table.find_message(text))
                row.priority = to_string(entry->priority);
            try {
                row.measurement = measure_codec(*codec, text, reps);
            } catch (const CodecError& err) {
                row.error = err.what();
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
    out << "codec,message,priority,uncompressed_bits,compressed_bits,ratio,"
           "encode_us,decode_us,ratio_per_ms\n";
    for (const BenchRow& row : report.rows) {
        out << csv_field(row.codec) << ',' << csv_field(row.message) << ','
            << csv_field(row.priority) << ',';
        if (row.error.empty()) {
            const Measurement& m = row.measurement;
            out << m.size.uncompressed_bits << ',' << m.size.compressed_bits << ','
                << format_double(m.size.ratio) << ',' << format_double(m.timing.encode_us)
                << ',' << format_double(m.timing.decode_us) << ','
                << format_double(m.ratio_per_ms);
        } else {
            out << ",,,,,";
        }
        out << '\n';
    }
}

std::string environment_summary() {
    std::string s = "compiler ";
#if defined(__clang__)
    s += "clang ";
    s += __clang_version__;
#elif defined(__GNUC__)
    s += "gcc ";
    s += __VERSION__;
#else
    s += "unknown";
#endif
#ifdef NDEBUG
    s += ", optimized build";
#else
    s += ", unoptimized build";
#endif
    return s;
}

} // namespace bsm
