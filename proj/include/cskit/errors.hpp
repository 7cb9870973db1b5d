#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cskit {

// Single exception type for all domain errors. `code` is a stable,
// machine-readable identifier; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* ZeroConstantTerm    = "ZeroConstantTerm";
inline constexpr const char* NonzeroInnerConstant = "NonzeroInnerConstant";
inline constexpr const char* NotInvertible       = "NotInvertible";
inline constexpr const char* NonUnitConstant     = "NonUnitConstant";
inline constexpr const char* OrderMismatch       = "OrderMismatch";
inline constexpr const char* ZeroMean            = "ZeroMean";
inline constexpr const char* ZeroDilation        = "ZeroDilation";
inline constexpr const char* ParameterOutOfRange = "ParameterOutOfRange";
inline constexpr const char* NotCentered         = "NotCentered";
inline constexpr const char* NotUnitVariance     = "NotUnitVariance";
inline constexpr const char* InsufficientMoments = "InsufficientMoments";
inline constexpr const char* InsufficientSequence = "InsufficientSequence";
inline constexpr const char* InsufficientOrder   = "InsufficientOrder";
inline constexpr const char* NotAMomentSequence  = "NotAMomentSequence";
inline constexpr const char* OracleCapExceeded   = "OracleCapExceeded";
inline constexpr const char* ZeroLeadCoefficient = "ZeroLeadCoefficient";
inline constexpr const char* InconsistentPair    = "InconsistentPair";
inline constexpr const char* ClosedFormMismatch  = "ClosedFormMismatch";
inline constexpr const char* NonUnitS0           = "NonUnitS0";
inline constexpr const char* IdentityCheckFailed = "IdentityCheckFailed";
inline constexpr const char* InvalidInput        = "InvalidInput";
} // namespace errc

} // namespace cskit
