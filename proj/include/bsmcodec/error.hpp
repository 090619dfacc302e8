#pragma once

#include <stdexcept>
#include <string>

namespace bsm {

// Failure categories shared by all codecs and the framing layer. Decoders
// distinguish a stream that ended too early (TruncatedStream) from one that
// is structurally invalid (MalformedFrame).
enum class ErrorKind {
    InvalidArgument,
    OutOfAlphabet,
    TruncatedStream,
    MalformedFrame,
    UnknownMessage,
    UnknownAbbreviation,
    UnknownCodeword,
    UnknownCodec,
    TableParse,
    UndefinedRatio,
    CodecFault,
};

const char* to_string(ErrorKind kind);

class CodecError : public std::runtime_error {
public:
    CodecError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace bsm
