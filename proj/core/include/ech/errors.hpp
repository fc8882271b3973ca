#pragma once

#include <stdexcept>
#include <string>

namespace ech {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a structural invariant (coincident punctures, bad sizes, ...).
struct InvalidConfiguration : Error {
    using Error::Error;
};

// Input is structurally fine but degenerate for the requested computation
// (repeated points in a determinant, division by zero in row reduction).
struct DegenerateInput : Error {
    using Error::Error;
};

// A checked precondition of an operation does not hold.
struct PreconditionViolated : Error {
    using Error::Error;
};

// A numeric solve left its admissible range (bracketing failure etc).
// Carries human-readable diagnostics for the report.
struct NumericRangeError : Error {
    explicit NumericRangeError(const std::string& what, std::string diag = {})
        : Error(what), diagnostics(std::move(diag)) {}
    std::string diagnostics;
};

// Restriction vector rejected by the admissibility test.
struct InadmissibleRestriction : Error {
    using Error::Error;
};

}  // namespace ech
