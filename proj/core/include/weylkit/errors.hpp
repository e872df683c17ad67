// errors.hpp — exception taxonomy shared by every weylkit module.
//
// Each exception name matches the error contract of the operation that
// throws it; all derive from WeylkitError so callers can catch broadly.

#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

/// Base class of every error thrown by the library.
struct WeylkitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A type label outside the supported set {A, B, C, D, G2}.
struct UnsupportedType : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A rank outside the valid range for the requested type.
struct InvalidRank : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// Operands of incompatible dimensions (vectors, matrices, group elements).
struct DimensionMismatch : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A coweight with non-integer coefficients where a lattice point is needed.
struct NonIntegralCoweight : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A simple-root index outside 1..rank.
struct IndexOutOfRange : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A coweight that is not dominant where dominance is required.
struct NonDominant : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A vector that is not a root of the ambient root system.
struct RootNotInSystem : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A preset was requested at odd genus; the standard constructions need 2|g.
struct OddGenus : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// The all-zero multiplicity vector, which encodes no cocharacter.
struct ZeroCocharacter : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// Word search exceeded the caller-supplied budget (internal inconsistency
/// when the budget is the inversion count).
struct BudgetExceeded : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// Scheme search exceeded its node budget before reaching a verdict.
struct SearchBudgetExceeded : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// A Killing-form computation hit a degenerate pairing (impossible for the
/// semisimple systems this library builds; guards internal consistency).
struct DegeneratePairing : WeylkitError {
  using WeylkitError::WeylkitError;
};

/// Malformed serialized input (signed permutations, schemes, vectors).
struct ParseError : WeylkitError {
  using WeylkitError::WeylkitError;
};

}  // namespace weylkit
