#pragma once

#include <stdexcept>
#include <string>

namespace tansurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// expression language
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'"), variable(name) {}
    std::string variable;
};
struct DomainError : Error {
    using Error::Error;
};

// jets and covariant chains
struct OrderExhausted : Error {
    using Error::Error;
};

// curve / frame construction
struct DegeneracyMismatch : Error {
    using Error::Error;
};
struct FrameUnavailable : Error {
    using Error::Error;
};

// integration
struct StepLimitExceeded : Error {
    using Error::Error;
};
struct BlowUp : Error {
    using Error::Error;
};
struct NearSingularQuotient : Error {
    using Error::Error;
};

// classification
struct MalformedType : Error {
    using Error::Error;
};

// genericity harness
struct ResampleLimit : Error {
    using Error::Error;
};

// scene / io
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace tansurf
