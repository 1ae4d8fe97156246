#ifndef TFV_ERRORS_HPP
#define TFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tfv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& msg) : Error(msg) {}
};
struct ModuliNotCoprime : Error {
    explicit ModuliNotCoprime(const std::string& msg) : Error(msg) {}
};
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& msg) : Error(msg) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};
struct PoleAtNonpositiveInteger : Error {
    explicit PoleAtNonpositiveInteger(const std::string& msg) : Error(msg) {}
};
struct QuadratureNonconvergent : Error {
    explicit QuadratureNonconvergent(const std::string& msg) : Error(msg) {}
};
struct NonconvergentAfterMaxPanels : Error {
    explicit NonconvergentAfterMaxPanels(const std::string& msg) : Error(msg) {}
};
struct ContourTruncationTooShort : Error {
    explicit ContourTruncationTooShort(const std::string& msg) : Error(msg) {}
};
struct UnsupportedTestFunction : Error {
    explicit UnsupportedTestFunction(const std::string& msg) : Error(msg) {}
};
struct BoundCertificateFailed : Error {
    explicit BoundCertificateFailed(const std::string& msg) : Error(msg) {}
};
struct DecayCertificateFailed : Error {
    explicit DecayCertificateFailed(const std::string& msg) : Error(msg) {}
};
struct TruncationInsufficient : Error {
    explicit TruncationInsufficient(const std::string& msg) : Error(msg) {}
};
struct TailBoundExceedsTolerance : Error {
    explicit TailBoundExceedsTolerance(const std::string& msg) : Error(msg) {}
};
struct DimensionZero : Error {
    explicit DimensionZero(const std::string& msg) : Error(msg) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};
struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& msg) : Error(msg) {}
};
struct NotSeparating : Error {
    explicit NotSeparating(const std::string& msg) : Error(msg) {}
};
struct UnknownStep : Error {
    explicit UnknownStep(const std::string& msg) : Error(msg) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};
struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& msg) : Error(msg) {}
};
struct AllValuesBelowNoiseFloor : Error {
    explicit AllValuesBelowNoiseFloor(const std::string& msg) : Error(msg) {}
};

} // namespace tfv

#endif
