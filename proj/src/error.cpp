#include <susa/error.hpp>

namespace susa {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::MalformedSeparators: return "MalformedSeparators";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NonRegular: return "NonRegular";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroHasNoReciprocal: return "ZeroHasNoReciprocal";
    case ErrorCode::ZeroIsNeitherRegularNorIrregular: return "ZeroIsNeitherRegularNorIrregular";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorCode::NonPerfectRadicand: return "NonPerfectRadicand";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::GapTooSmall: return "GapTooSmall";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownFormTag: return "UnknownFormTag";
    case ErrorCode::BadNumeral: return "BadNumeral";
    case ErrorCode::UnknownProblemId: return "UnknownProblemId";
    case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

} // namespace susa
