#pragma once

#include <stdexcept>
#include <string>

namespace padicres {

// Base of every error raised by the library. Domain errors describe inputs
// that are well formed but mathematically outside an operation's contract;
// usage errors describe malformed calls (mismatched fields, bad arguments).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept = 0;
    virtual bool is_domain_error() const noexcept { return true; }
};

#define PADICRES_DEFINE_ERROR(Name, Domain)                                    \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(what) {}                \
        const char* kind() const noexcept override { return #Name; }           \
        bool is_domain_error() const noexcept override { return Domain; }      \
    };

PADICRES_DEFINE_ERROR(UsageError, false)
PADICRES_DEFINE_ERROR(NotAUnit, true)
PADICRES_DEFINE_ERROR(WidegNotCertified, true)
PADICRES_DEFINE_ERROR(InsufficientXPrecision, true)
PADICRES_DEFINE_ERROR(CompositionDomain, true)
PADICRES_DEFINE_ERROR(NoUnitCoefficient, true)
PADICRES_DEFINE_ERROR(IndeterminateAtPrecision, true)
PADICRES_DEFINE_ERROR(BudgetExhausted, true)
PADICRES_DEFINE_ERROR(TruncationOverflow, true)
PADICRES_DEFINE_ERROR(IntegralityViolation, true)
PADICRES_DEFINE_ERROR(PreconditionViolation, true)

#undef PADICRES_DEFINE_ERROR

}  // namespace padicres
