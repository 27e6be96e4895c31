#ifndef CONVMDS_ERRORS_HPP
#define CONVMDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convmds {

// Base class for all library errors. Subtypes exist so callers (and the CLI
// exit-code mapping) can distinguish invalid input from internal failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// gf
struct NotPrime : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct BadModulus : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };

// poly
struct BothZero : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };
struct BadCoefficient : Error { using Error::Error; };

// convcode
struct RankDeficient : Error { using Error::Error; };
struct BadDimensions : Error { using Error::Error; };
struct UnsupportedK : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };

// distance
struct StateSpaceTooLarge : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// constructions
struct NotPrimitive : Error { using Error::Error; };
struct UnsupportedFieldSize : Error { using Error::Error; };
struct ZeroLeadRow : Error { using Error::Error; };
struct BadField : Error { using Error::Error; };

// cli / files
struct CodeFileError : Error { using Error::Error; };

// A computed report failed its own consistency checks; indicates a bug, not
// bad input.
struct InternalInconsistency : Error { using Error::Error; };

}  // namespace convmds

#endif
