#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramify {

using int64 = std::int64_t;
using uint64 = std::uint64_t;

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };

// series arithmetic
struct MismatchedPrime : Error { using Error::Error; };
struct MismatchedPrecision : Error { using Error::Error; };
struct MismatchedDepth : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct PositiveValuationRequired : Error { using Error::Error; };
struct NotReversible : Error { using Error::Error; };
struct RootObstruction : Error { using Error::Error; };

// automorphisms and filtrations
struct NotWild : Error { using Error::Error; };
struct IndistinguishableFromIdentity : Error { using Error::Error; };
struct NotAPnTorsionElement : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct WrongOrder : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };

// lift ring and Weierstrass preparation
struct ReductionVanishes : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// jump and orbit profiles
struct HasseArfViolation : Error {
    HasseArfViolation(int index, const std::string& what) : Error(what), index(index) {}
    int index;
};
struct StrictModeViolation : Error { using Error::Error; };
struct MismatchedProfiles : Error { using Error::Error; };
struct NonIntegralGenus : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

} // namespace ramify
