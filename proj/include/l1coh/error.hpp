#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace l1coh {

enum class ErrorCode {
    NonPowerOfTwoLength,
    ZeroNorm,
    NormTooFarFromOne,
    NonFinite,
    NotHermitian,
    TraceNotOne,
    NegativeDiagonal,
    DimensionOverflow,
    EmptyKeepSet,
    IndexOutOfRange,
    DuplicateIndex,
    NormalizationViolation,
    InvalidPermutation,
    DomainError,
    InvalidM,
    WrongArity,
    ArityMismatch,
    InvalidParams,
    NoValidParams,
    TooManyQubits,
    ParseError,
};

std::string_view error_name(ErrorCode code);

// Every validation failure in the library is reported through this type; the
// code names the violated invariant, the message carries the numbers.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace l1coh
