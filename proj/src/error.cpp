#include "bdcoh/error.hpp"

namespace bdcoh {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::PairingNotBilinear: return "PairingNotBilinear";
    case ErrorCode::NotEquivariantInput: return "NotEquivariantInput";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::SituationNotValidated: return "SituationNotValidated";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NonAbelianGroup: return "NonAbelianGroup";
    case ErrorCode::FamilyNotValidated: return "FamilyNotValidated";
    case ErrorCode::TablesNotClosed: return "TablesNotClosed";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace bdcoh
