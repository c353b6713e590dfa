#ifndef SUSA_ERRORS_HPP
#define SUSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace susa {

// Every typed failure the engine can signal. CLI maps these to exit code 1.
enum class ErrorCode {
    EmptyInput,
    DigitOutOfRange,
    MalformedSeparator,
    NonTerminating,
    DivisionByZero,
    NegativeResult,
    NotPerfectSquare,
    NegativeInput,
    NegativeDiscriminant,
    NoRationalRoot,
    NonPositive,
    OutOfBudget,
    UnboundReference,
    UnknownLabel,
    UnknownProblem,
    UnsupportedMode,
    MissingBinding,
    BadProcedure,
    BadData,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
        case ErrorCode::MalformedSeparator: return "MalformedSeparator";
        case ErrorCode::NonTerminating: return "NonTerminating";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NegativeResult: return "NegativeResult";
        case ErrorCode::NotPerfectSquare: return "NotPerfectSquare";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorCode::NoRationalRoot: return "NoRationalRoot";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::OutOfBudget: return "OutOfBudget";
        case ErrorCode::UnboundReference: return "UnboundReference";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::UnknownProblem: return "UnknownProblem";
        case ErrorCode::UnsupportedMode: return "UnsupportedMode";
        case ErrorCode::MissingBinding: return "MissingBinding";
        case ErrorCode::BadProcedure: return "BadProcedure";
        case ErrorCode::BadData: return "BadData";
    }
    return "Unknown";
}

} // namespace susa

#endif
