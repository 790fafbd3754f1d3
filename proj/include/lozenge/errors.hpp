#pragma once

#include <stdexcept>
#include <string>

namespace lozenge {

// Base class for every error the library throws on purpose.  Callers that
// want blanket handling catch this; tests usually catch the concrete type.
struct LozengeError : std::runtime_error {
    explicit LozengeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquare : LozengeError {
    explicit NotSquare(const std::string& what = "matrix is not square") : LozengeError(what) {}
};

struct IndexOutOfRange : LozengeError {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : LozengeError(what) {}
};

struct ParameterOutOfRange : LozengeError {
    explicit ParameterOutOfRange(const std::string& what = "parameter out of range") : LozengeError(what) {}
};

struct ZeroDenominator : LozengeError {
    explicit ZeroDenominator(const std::string& what = "division by zero") : LozengeError(what) {}
};

// umbral evaluation saw a surviving negative power of the symbol
struct NegativeExponent : LozengeError {
    explicit NegativeExponent(const std::string& what = "negative exponent survives umbral reduction") : LozengeError(what) {}
};

struct NonIntegerResult : LozengeError {
    explicit NonIntegerResult(const std::string& what = "expected an integer result") : LozengeError(what) {}
};

// a first-order limit window was not enough to resolve the quotient
struct UnresolvedSingularity : LozengeError {
    explicit UnresolvedSingularity(const std::string& what = "singularity unresolved at first order") : LozengeError(what) {}
};

struct SingularMomentMatrix : LozengeError {
    explicit SingularMomentMatrix(const std::string& what = "moment Hankel matrix is singular") : LozengeError(what) {}
};

struct NotTerminating : LozengeError {
    explicit NotTerminating(const std::string& what = "hypergeometric series does not terminate") : LozengeError(what) {}
};

struct ZeroDenominatorBeforeTermination : LozengeError {
    explicit ZeroDenominatorBeforeTermination(const std::string& what = "lower parameter hits a nonpositive integer before termination")
        : LozengeError(what) {}
};

struct SubsetTooSmall : LozengeError {
    explicit SubsetTooSmall(const std::string& what = "slot subset smaller than required") : LozengeError(what) {}
};

struct BudgetExceeded : LozengeError {
    explicit BudgetExceeded(const std::string& what = "enumeration budget exceeded") : LozengeError(what) {}
};

struct UnsupportedEvaluationPoint : LozengeError {
    explicit UnsupportedEvaluationPoint(const std::string& what = "no closed form at this evaluation point") : LozengeError(what) {}
};

// internal: an exact evaluation ran into a removable 0/0 and the caller
// should retry with a limit variable.  Never escapes the public surface.
struct NeedsLimit : LozengeError {
    explicit NeedsLimit(const std::string& what = "evaluation needs a limit") : LozengeError(what) {}
};

} // namespace lozenge
