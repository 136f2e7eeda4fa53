#pragma once

#include <stdexcept>
#include <string>

namespace fqgeom {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct EvenCharacteristicError : Error { using Error::Error; };
struct NotSymmetricError : Error { using Error::Error; };
struct DegenerateFormError : Error { using Error::Error; };
struct NoNullVectorError : Error { using Error::Error; };
struct InfeasibleCountError : Error { using Error::Error; };
struct DependentBasisError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct EmptyUnitSphereError : Error { using Error::Error; };
struct NotOnSphereError : Error { using Error::Error; };
struct NegativeValueError : Error { using Error::Error; };
struct BadExponentError : Error { using Error::Error; };
struct WrongResidueClassError : Error { using Error::Error; };
struct SingularGramError : Error { using Error::Error; };
struct BadEpsilonError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace fqgeom
