#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bsm::cli {

// Command behavior lives here, behind plain option structs and streams, so
// the whole front end is testable in-process; main() only parses argv.
// Exit codes: 0 success, 1 usage or codec error, 2 benchmark finished but
// some rows failed (the report is still written).

struct EncodeOptions {
    std::string codec;
    std::string message;
    std::optional<std::string> table_path;
};

// Writes the encoded message as raw frame bytes to `out`.
int run_encode(const EncodeOptions& opts, std::ostream& out, std::ostream& err);

struct DecodeOptions {
    std::optional<std::string> table_path;
};

// Reads raw frame bytes from `in` and writes the recovered message plus a
// newline to `out`.
int run_decode(const DecodeOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err);

struct BenchOptions {
    std::vector<std::string> codecs; // empty or {"all"} selects every codec
    unsigned reps = 1000;
    std::optional<std::string> table_path;
    std::optional<std::string> out_path; // CSV to this file instead of `out`
    std::optional<std::string> message;  // bench just this text
};

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

struct ValidateOptions {
    std::optional<std::string> table_path;
};

// Prints one PASS/FAIL line per table check; exit 0 iff all pass.
int run_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err);

} // namespace bsm::cli
