#pragma once

#include <stdexcept>
#include <string>

namespace quasichar {

/// Broad failure classes; the CLI maps each to an exit code.
enum class ErrorKind { input, budget, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define QUASICHAR_ERROR(Name, Kind)                                            \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(ErrorKind::Kind, std::string(#Name ": ") + what) {}        \
    };

QUASICHAR_ERROR(InvalidRing, input)
QUASICHAR_ERROR(AllGeneratorsZero, input)
QUASICHAR_ERROR(RingMismatch, input)
QUASICHAR_ERROR(NotPrime, input)
QUASICHAR_ERROR(ElementNotInModule, input)
QUASICHAR_ERROR(ZeroInMultiplicativeSet, input)
QUASICHAR_ERROR(UnknownName, input)
QUASICHAR_ERROR(InvalidArrangement, input)
QUASICHAR_ERROR(ParseError, input)

QUASICHAR_ERROR(BudgetExceeded, budget)
QUASICHAR_ERROR(ArithmeticOverflow, budget)
QUASICHAR_ERROR(NormFactorizationTooLarge, budget)
QUASICHAR_ERROR(PathInfeasible, budget)
QUASICHAR_ERROR(ExponentTooLarge, budget)

QUASICHAR_ERROR(NonIntegralQuotient, internal)
QUASICHAR_ERROR(CertificateFailure, internal)
QUASICHAR_ERROR(InternalError, internal)

#undef QUASICHAR_ERROR

} // namespace quasichar
