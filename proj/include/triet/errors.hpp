#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triet {

/** Base class of every error thrown by this library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Malformed textual input (number, word or morphism literal). */
struct ParseError : Error {
  using Error::Error;
};

/** A constructor argument violates a documented type invariant. */
struct InvalidParameters : Error {
  using Error::Error;
};

// Field arithmetic.

struct MixedFields : Error {
  MixedFields() : Error("operands lie in distinct quadratic fields") {}
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/** Basis element of coordinate extraction must be irrational. */
struct RationalBase : Error {
  RationalBase() : Error("coordinate basis requires an irrational element") {}
  using Error::Error;
};

// Words and morphisms.

struct LengthMismatch : Error {
  using Error::Error;
};

struct NotAmicable : Error {
  using Error::Error;
};

struct NoFixedPoint : Error {
  using Error::Error;
};

struct InvalidSeed : Error {
  using Error::Error;
};

struct NotPrimitive : Error {
  using Error::Error;
};

/** Dominant eigenvalue is rational or of degree three. */
struct NotQuadratic : Error {
  using Error::Error;
};

// Certification.

struct Degenerate : Error {
  using Error::Error;
};

struct InterceptOutOfRange : Error {
  using Error::Error;
};

struct ConjugateNotPositive : Error {
  using Error::Error;
};

struct NotThreeIetCompatible : Error {
  using Error::Error;
};

struct NotDecomposable : Error {
  using Error::Error;
};

// Geometric representations.

/** Stretching by the tested factor does not map the point set into itself.
    Carries the indices of the first offending gap. */
struct NotSelfSimilar : Error {
  std::size_t gap_index;
  explicit NotSelfSimilar(const std::string& msg, std::size_t gap = 0)
      : Error(msg), gap_index(gap) {}
};

struct WindowTooShort : Error {
  using Error::Error;
};

struct AmbiguousLength : Error {
  using Error::Error;
};

}  // namespace triet
