#include "forge/error.hpp"

namespace forge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::DegenerateParameter: return "DegenerateParameter";
        case ErrorKind::PrimeExcluded: return "PrimeExcluded";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::WrongBranch: return "WrongBranch";
        case ErrorKind::OracleExhausted: return "OracleExhausted";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace forge
