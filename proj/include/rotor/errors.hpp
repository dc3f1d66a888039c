#pragma once

#include <stdexcept>

namespace rotor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multigraph construction.
struct NonStoppingError : Error { using Error::Error; };
struct SinkWithOutArcError : Error { using Error::Error; };
struct EmptyRotorOrderError : Error { using Error::Error; };

// Engine operations.
struct SinkVertexError : Error { using Error::Error; };
struct NegativeInputError : Error { using Error::Error; };
struct NotACircuitError : Error { using Error::Error; };
struct StepBudgetExceededError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };

// Digit machinery.
struct NonIntegralValueError : Error { using Error::Error; };
struct SymbolOutOfRangeError : Error { using Error::Error; };
struct NotAcyclicError : Error { using Error::Error; };
struct NotInLaError : Error { using Error::Error; };
struct NotAnArcmonicValueError : Error { using Error::Error; };

// Path instances and solver.
struct InvalidInstanceError : Error { using Error::Error; };
struct SizeLimitExceededError : Error { using Error::Error; };

// Instance files.
struct SchemaError : Error { using Error::Error; };

}  // namespace rotor
