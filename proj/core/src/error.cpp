#include "hitomezashi/error.hpp"

namespace hitomezashi {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kProgramUnderflow: return "program underflow";
    case ErrorKind::kEmptyFillWord: return "empty fill word";
    case ErrorKind::kInvalidProgram: return "invalid program";
    case ErrorKind::kInvalidSpec: return "invalid pattern spec";
    case ErrorKind::kEmptyEncoding: return "empty encoding";
    case ErrorKind::kOutOfBounds: return "out of bounds";
    case ErrorKind::kNotSimplePattern: return "not a simple pattern";
    case ErrorKind::kInvalidCycle: return "invalid cycle";
    case ErrorKind::kSelfIntersecting: return "self-intersecting";
    case ErrorKind::kOpenBoundary: return "open boundary";
    case ErrorKind::kSelfIntersectingBoundary: return "self-intersecting boundary";
    case ErrorKind::kNotTwoColorable: return "not two-colorable";
    case ErrorKind::kPatternNotFound: return "pattern not found";
    case ErrorKind::kWindowTooSmall: return "window too small";
    case ErrorKind::kOverflow: return "integer overflow";
    }
    return "unknown error";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

} // namespace hitomezashi
