#pragma once

#include <stdexcept>
#include <string>

namespace bdcoh {

// Numeric values are mirrored by bdcoh_status in bdcoh.h.
enum class ErrorCode : int {
    MalformedInput = 1,
    NonAssociative,
    NoIdentity,
    NoInverse,
    IndexOutOfRange,
    DegreeOverflow,
    NotACocycle,
    DegreeMismatch,
    GroupMismatch,
    PairingNotBilinear,
    NotEquivariantInput,
    LemmaViolation,
    SituationNotValidated,
    NotPrime,
    UnknownElement,
    ContextMismatch,
    NonAbelianGroup,
    FamilyNotValidated,
    TablesNotClosed,
    Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace bdcoh
