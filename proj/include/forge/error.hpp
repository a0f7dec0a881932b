#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forge {

enum class ErrorKind {
    InvalidInput,
    InvalidParameter,
    DegenerateParameter,
    PrimeExcluded,
    FieldMismatch,
    DivisionByZero,
    SingularCurve,
    WrongBranch,
    OracleExhausted,
    InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace forge
