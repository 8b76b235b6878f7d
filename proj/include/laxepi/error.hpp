#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace laxepi {

enum class ErrorCode {
    DimensionMismatch,
    InvalidArgument,
    NotComposable,
    IdentityCollapsed,
    NotSurjectiveOnObjects,
    NotBijectiveOnObjects,
    RepresentableNotClosed,
    IdealNotIdempotent,
    InvalidQuotientHom,
    Parse,
    Invariant,
};

/// Stable identifier printed by the CLI, e.g. "E_IDEAL_NOT_IDEMPOTENT".
const char* code_name(ErrorCode code) noexcept;
std::optional<ErrorCode> code_from_name(std::string_view name) noexcept;

/// Precondition errors map to CLI exit code 2, parse errors to 3,
/// invariant failures to 4.
int exit_code_for(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

/// Internal consistency check: a failure here is a bug, not a bad input.
inline void ensure(bool condition, const char* what) {
    if (!condition) fail(ErrorCode::Invariant, what);
}

}  // namespace laxepi
