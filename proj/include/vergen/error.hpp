#pragma once

#include <stdexcept>
#include <string>

namespace vergen {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    DimensionMismatch,
    EmptyInput,
    Unbounded,
    Precondition,
    Budget,
    Verification,
    DimensionCap,
    Internal,
};

/// Single exception type for the library; `kind()` drives the C error codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) fail(kind, what);
}

}  // namespace vergen
