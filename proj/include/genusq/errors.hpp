#pragma once

#include <stdexcept>
#include <string>

namespace genusq {

// All domain errors derive from Error so callers can catch the library
// surface in one clause and still discriminate when they need to.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquarefree : Error {
    using Error::Error;
};

struct NotQuadraticResidue : Error {
    using Error::Error;
};

struct SymbolUndefined : Error {
    using Error::Error;
};

struct InvalidPrime : Error {
    using Error::Error;
};

struct MixedField : Error {
    using Error::Error;
};

struct NotIntegral : Error {
    using Error::Error;
};

struct FormMismatch : Error {
    using Error::Error;
};

// The existence of a solution is a theorem; hitting this means a bug, so the
// message must carry enough state to debug from a log.
struct NoSolutionInBound : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct NotOddElement : Error {
    using Error::Error;
};

struct TooManyGenerators : Error {
    using Error::Error;
};

// Raised when the case dispatch falls off the decision table.
struct UnhandledCase : Error {
    using Error::Error;
};

// Raised when a condition evaluated through residue symbols disagrees with
// the same condition evaluated through mod-4 classes.
struct DualEvaluationMismatch : Error {
    using Error::Error;
};

}  // namespace genusq
