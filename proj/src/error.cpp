#include "laxepi/error.hpp"

namespace laxepi {

const char* code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
        case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
        case ErrorCode::NotComposable: return "E_NOT_COMPOSABLE";
        case ErrorCode::IdentityCollapsed: return "E_IDENTITY_COLLAPSED";
        case ErrorCode::NotSurjectiveOnObjects: return "E_NOT_SURJECTIVE_ON_OBJECTS";
        case ErrorCode::NotBijectiveOnObjects: return "E_NOT_BIJECTIVE_ON_OBJECTS";
        case ErrorCode::RepresentableNotClosed: return "E_REPRESENTABLE_NOT_CLOSED";
        case ErrorCode::IdealNotIdempotent: return "E_IDEAL_NOT_IDEMPOTENT";
        case ErrorCode::InvalidQuotientHom: return "E_INVALID_QUOTIENT_HOM";
        case ErrorCode::Parse: return "E_PARSE";
        case ErrorCode::Invariant: return "E_INTERNAL_INVARIANT";
    }
    return "E_UNKNOWN";
}

std::optional<ErrorCode> code_from_name(std::string_view name) noexcept {
    for (int i = 0; i <= static_cast<int>(ErrorCode::Invariant); ++i) {
        auto c = static_cast<ErrorCode>(i);
        if (name == code_name(c)) return c;
    }
    return std::nullopt;
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Parse: return 3;
        case ErrorCode::Invariant: return 4;
        default: return 2;
    }
}

}  // namespace laxepi
