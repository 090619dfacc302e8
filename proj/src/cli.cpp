#include "bsmcodec/cli.hpp"

#include <fstream>
#include <iterator>

#include "bsmcodec/bench.hpp"
#include "bsmcodec/codec.hpp"
#include "bsmcodec/corpus.hpp"
#include "bsmcodec/error.hpp"
#include "bsmcodec/wire.hpp"

namespace bsm::cli {

namespace {

MessageTable load_table(const std::optional<std::string>& path) {
    if (path) return MessageTable::load(*path);
    return MessageTable::builtin();
}

int report_error(std::ostream& err, const CodecError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
}

} // namespace

int run_encode(const EncodeOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        MessageTable table = load_table(opts.table_path);
        std::unique_ptr<Codec> codec = make_codec(opts.codec, table);
        WireFrame frame{codec->id(), codec->encode(opts.message)};
        std::vector<std::uint8_t> bytes = pack_frame(frame);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        return 0;
    } catch (const CodecError& e) {
        return report_error(err, e);
    }
}

int run_decode(const DecodeOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
    try {
        MessageTable table = load_table(opts.table_path);
        std::string raw(std::istreambuf_iterator<char>(in), {});
        std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
        WireFrame frame = parse_frame(bytes);
        std::unique_ptr<Codec> codec = make_codec(frame.codec_id, table);
        out << codec->decode(frame.payload) << '\n';
        return 0;
    } catch (const CodecError& e) {
        return report_error(err, e);
    }
}

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        MessageTable table = load_table(opts.table_path);

        std::vector<std::string> selected;
        if (opts.codecs.empty() ||
            (opts.codecs.size() == 1 && opts.codecs.front() == "all")) {
            for (std::string_view name : codec_names()) selected.emplace_back(name);
        } else {
            selected = opts.codecs;
        }

        std::optional<std::string_view> override_text;
        if (opts.message) override_text = *opts.message;

        BenchReport report = run_benchmark(table, selected, opts.reps, override_text);

        if (opts.out_path) {
            std::ofstream file(*opts.out_path);
            if (!file) {
                err << "error: cannot open " << *opts.out_path << " for writing\n";
                return 1;
            }
            write_csv(file, report);
        } else {
            write_csv(out, report);
        }

        if (report.has_errors()) {
            for (const BenchRow& row : report.rows)
                if (!row.error.empty())
                    err << "error: " << row.codec << " on \"" << row.message
                        << "\": " << row.error << '\n';
            return 2;
        }
        return 0;
    } catch (const CodecError& e) {
        return report_error(err, e);
    }
}

int run_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        MessageTable table = load_table(opts.table_path);
        ValidationReport report = validate_message_table(table);
        for (const auto& check : report.checks) {
            out << (check.passed ? "PASS" : "FAIL") << ' ' << check.name;
            if (!check.detail.empty()) out << ": " << check.detail;
            out << '\n';
        }
        return report.all_passed() ? 0 : 1;
    } catch (const CodecError& e) {
        return report_error(err, e);
    }
}

} // namespace bsm::cli
