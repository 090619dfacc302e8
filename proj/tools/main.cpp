#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bsmcodec/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"source codecs for short vehicle safety messages"};
    app.require_subcommand(1);

    bsm::cli::EncodeOptions enc;
    std::string enc_positional;
    auto* enc_cmd =
        app.add_subcommand("encode", "encode one message into a frame on stdout");
    enc_cmd->add_option("--codec", enc.codec, "codec name")->required();
    auto* enc_pos = enc_cmd->add_option("text", enc_positional, "message text");
    auto* enc_flag =
        enc_cmd->add_option("--message", enc.message, "message text (alternative form)");
    enc_pos->excludes(enc_flag);
    enc_flag->excludes(enc_pos);
    enc_cmd->add_option("--table", enc.table_path, "message table file");
    enc_cmd->callback([&] {
        if (enc_pos->count() == 0 && enc_flag->count() == 0)
            throw CLI::RequiredError("message");
        if (enc_pos->count() > 0) enc.message = enc_positional;
    });

    bsm::cli::DecodeOptions dec;
    auto* dec_cmd =
        app.add_subcommand("decode", "decode a frame from stdin back to its message");
    dec_cmd->add_option("--table", dec.table_path, "message table file");

    bsm::cli::BenchOptions bench;
    auto* bench_cmd =
        app.add_subcommand("bench", "measure sizes, ratios and timings as CSV");
    bench_cmd->add_option("--codecs", bench.codecs, "comma-separated codec names, or all")
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "timed repetitions per row")
        ->capture_default_str();
    bench_cmd->add_option("--table", bench.table_path, "message table file");
    bench_cmd->add_option("--out", bench.out_path, "write the CSV here instead of stdout");
    bench_cmd->add_option("--message", bench.message,
                          "bench this text instead of every table message");

    bsm::cli::ValidateOptions val;
    auto* val_cmd =
        app.add_subcommand("validate", "check a message table's structural properties");
    val_cmd->add_option("--table", val.table_path, "message table file");

    CLI11_PARSE(app, argc, argv);

    if (*enc_cmd) return bsm::cli::run_encode(enc, std::cout, std::cerr);
    if (*dec_cmd) return bsm::cli::run_decode(dec, std::cin, std::cout, std::cerr);
    if (*bench_cmd) return bsm::cli::run_bench(bench, std::cout, std::cerr);
    if (*val_cmd) return bsm::cli::run_validate(val, std::cout, std::cerr);
    return 1;
}
