#include "bsmcodec/error.hpp"

namespace bsm {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::OutOfAlphabet: return "out-of-alphabet character";
    case ErrorKind::TruncatedStream: return "truncated stream";
    case ErrorKind::MalformedFrame: return "malformed frame";
    case ErrorKind::UnknownMessage: return "unknown message";
    case ErrorKind::UnknownAbbreviation: return "unknown abbreviation";
    case ErrorKind::UnknownCodeword: return "unknown codeword";
    case ErrorKind::UnknownCodec: return "unknown codec";
    case ErrorKind::TableParse: return "table parse error";
    case ErrorKind::UndefinedRatio: return "undefined ratio";
    case ErrorKind::CodecFault: return "codec fault";
    }
    return "error";
}

} // namespace bsm
