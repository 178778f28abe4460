#ifndef SEPLIE_ERRORS_HPP
#define SEPLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seplie {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// series
struct NotInvertible : Error { using Error::Error; };

// ambient / structure constants
struct RequiresHomogeneous : Error { using Error::Error; };
struct InvalidStructureConstants : Error { using Error::Error; };

// presentations
struct DegreeViolation : Error { using Error::Error; };
struct DimensionViolation : Error { using Error::Error; };
struct DSquareNonzero : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };

// analysis / separator
struct NotSeparated : Error { using Error::Error; };
struct NoPreimage : Error { using Error::Error; };
struct NoBoundingChain : Error { using Error::Error; };
struct HorizonExceeded : Error { using Error::Error; };
struct InsufficientTruncation : Error { using Error::Error; };

// freeness
struct NotASubalgebra : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// model zoo
struct MismatchedDimension : Error { using Error::Error; };
struct SignResolutionFailed : Error { using Error::Error; };

// cli / io
struct ParseError : Error { using Error::Error; };

}  // namespace seplie

#endif
