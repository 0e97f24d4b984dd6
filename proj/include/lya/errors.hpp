#pragma once

#include <stdexcept>
#include <string>

namespace lya {

enum class ErrorKind {
    DimMismatch,
    PolynomialEntries,
    Singular,
    DegreeCapExceeded,
    NotInSubcomplex,
    UnsupportedDegree,
    InvalidRep,
    NotNijenhuis,
    NotCompatible,
    ConsequenceViolated,
    IncompatibleCrossCheck,
    DualRouteDisagreement,
    PreconditionFailed,
    NotSymmetric,
    NotSkew,
    ParseError,
    ConflictingEntry,
    BadRational,
};

const char* kind_name(ErrorKind k);

// Single exception type; the kind tells callers (and the CLI) what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind), message_(msg) {}
    ErrorKind kind() const { return kind_; }
    // The message without the kind prefix, for rethrowing with more context.
    const std::string& message() const { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require_dims(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::DimMismatch, what);
}

}  // namespace lya
