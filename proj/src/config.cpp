#include "l1coh/config.hpp"
#include "l1coh/error.hpp"

namespace l1coh {

namespace {
Config g_config;
}

const Config& config() { return g_config; }

void set_config(const Config& cfg) { g_config = cfg; }

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPowerOfTwoLength: return "NonPowerOfTwoLength";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::NormTooFarFromOne: return "NormTooFarFromOne";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NegativeDiagonal: return "NegativeDiagonal";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::NormalizationViolation: return "NormalizationViolation";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoValidParams: return "NoValidParams";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace l1coh
