#include "entcat/error.hpp"

namespace entcat {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::Inapplicable: return "Inapplicable";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
    }
    return "Unknown";
}

}  // namespace entcat
