#pragma once

#include <stdexcept>
#include <string>

namespace modop {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyAlgebra : Error { using Error::Error; };
struct InvalidDim : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct ModuleMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct BlockOutOfRange : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct InconsistentGrowth : Error { using Error::Error; };
struct NotAGraph : Error { using Error::Error; };
struct NotStrictContraction : Error { using Error::Error; };
struct UndecidableTail : Error { using Error::Error; };
struct NotMinimalProjection : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

} // namespace modop
