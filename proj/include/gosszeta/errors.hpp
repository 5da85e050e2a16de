#pragma once

#include <stdexcept>
#include <string>

namespace gosszeta {

/// Reason codes for domain errors raised by the library.
enum class Err {
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    BadPrecision,
    FieldMismatch,
    ZeroInput,
    InsufficientDigitPrecision,
    NotOneUnit,
    NotMonic,
    NotInA,
    EnumerationTooLarge,
    NoConvergence,
    BadIndex,
    Unsupported,
};

const char* err_name(Err kind);

/// Thrown whenever an operation is called outside its domain or a
/// resource guard trips. Carries a machine-checkable reason code.
class DomainError : public std::runtime_error {
public:
    DomainError(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const noexcept { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
    throw DomainError(kind, msg);
}

} // namespace gosszeta
