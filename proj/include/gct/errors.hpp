#pragma once

#include <stdexcept>
#include <string>

namespace gct {

// Base for all toolkit errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction-time validation failures; message names the witness.
struct ValidationError : Error {
    using Error::Error;
};
struct NotAssociative : ValidationError {
    using ValidationError::ValidationError;
};
struct NotLatinSquare : ValidationError {
    using ValidationError::ValidationError;
};
struct NoIdentity : ValidationError {
    using ValidationError::ValidationError;
};
struct OrderCapExceeded : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct NotAlgebraicInteger : Error {
    using Error::Error;
};

// A proved identity failed to hold for a computed object: always a bug,
// never a property of the input.
struct VerificationFailed : Error {
    using Error::Error;
};

// Table path and element-level oracle path disagreed.
struct PathDisagreement : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct SingularX : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct LambdaNotDiagonal : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct NonIntegral : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct ActionMismatch : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct NotRootOfUnity : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};
struct CongruenceFailed : VerificationFailed {
    using VerificationFailed::VerificationFailed;
};

struct SyntaxError : Error {
    int line;
    int col;
    std::string expected;
    SyntaxError(int line_, int col_, const std::string& expected_)
        : Error("syntax error at line " + std::to_string(line_) + ", col " +
                std::to_string(col_) + ": expected " + expected_),
          line(line_), col(col_), expected(expected_) {}
};

}  // namespace gct
