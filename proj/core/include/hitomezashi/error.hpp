#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hitomezashi {

enum class ErrorKind {
    kParse,                     // malformed word or document
    kProgramUnderflow,
    kEmptyFillWord,
    kInvalidProgram,
    kInvalidSpec,
    kEmptyEncoding,
    kOutOfBounds,
    kNotSimplePattern,
    kInvalidCycle,
    kSelfIntersecting,
    kOpenBoundary,
    kSelfIntersectingBoundary,
    kNotTwoColorable,
    kPatternNotFound,
    kWindowTooSmall,
    kOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hitomezashi
