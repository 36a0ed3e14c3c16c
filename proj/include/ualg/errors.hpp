#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

/// Base of every error thrown by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error { using Error::Error; };
struct ArityError : Error { using Error::Error; };
struct UnboundVariable : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct NotACongruence : Error { using Error::Error; };
struct NotAHomomorphism : Error { using Error::Error; };
struct SizeBoundExceeded : Error { using Error::Error; };
struct NotCentral : Error { using Error::Error; };
struct NoComplementFound : Error { using Error::Error; };
struct ShortTermMissing : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };
struct NonBooleanFC : Error { using Error::Error; };

} // namespace ualg
