#pragma once

#include <stdexcept>
#include <string>

namespace susa {

enum class ErrorCode {
    // numeral / value parsing
    EmptyInput,
    DigitOutOfRange,
    MalformedSeparators,
    NegativeValue,
    NonRegular,
    // arithmetic
    DivisionByZero,
    ZeroHasNoReciprocal,
    ZeroIsNeitherRegularNorIrregular,
    // solving
    InvalidProblem,
    NoPositiveRoot,
    NonPerfectRadicand,
    NegativeDiscriminant,
    GapTooSmall,
    // corpus / cli
    SyntaxError,
    DuplicateId,
    UnknownFormTag,
    BadNumeral,
    UnknownProblemId,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    // Inputs for which no exact answer exists, as opposed to inputs that are
    // ill-formed. The CLI maps these to a distinct exit status.
    bool is_infeasible() const noexcept {
        switch (code_) {
        case ErrorCode::NoPositiveRoot:
        case ErrorCode::NonPerfectRadicand:
        case ErrorCode::NegativeDiscriminant:
        case ErrorCode::GapTooSmall:
        case ErrorCode::NonRegular:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorCode code_;
};

} // namespace susa
