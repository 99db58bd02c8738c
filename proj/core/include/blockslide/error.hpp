#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockslide {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    InvalidPair,
    NotConnected,
    NotABlockGraph,
    NotIndependent,
    PreconditionViolated,
    InvalidParams,
    TruncatedSpace,
    SyntaxError,
    MissingSection,
};

std::string_view to_string(ErrorKind kind);

// User-facing failure: bad input, violated preconditions, malformed files.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Broken internal invariant. Never caused by user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] void throw_internal(const char* expr, const char* file, int line, std::string_view what);

} // namespace blockslide

#define BLOCKSLIDE_ENSURE(cond, what)                                              \
    do {                                                                           \
        if (!(cond)) ::blockslide::throw_internal(#cond, __FILE__, __LINE__, what); \
    } while (false)
