#ifndef HARDY_ERRORS_HPP
#define HARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardy {

// Base class for everything the library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// eval() called within 1e-12 of a pole 1/conj(zero).
struct PoleEvaluation : Error {
  using Error::Error;
};

// div(B1, B2) with B2's zeros not contained in B1's.
struct NotDivisible : Error {
  using Error::Error;
};

// coprime_factorization of the identically-zero symbol.
struct ZeroSymbol : Error {
  using Error::Error;
};

// A product-symbol Fourier coefficient cannot be bounded below the requested
// tolerance at the configured quadrature resolution.
struct GrammarOverflow : Error {
  using Error::Error;
};

// op_product's reported truncation bound exceeds the requested tolerance.
struct BufferTooSmall : Error {
  using Error::Error;
};

// det of the symbol is identically zero (sampled check).
struct DegenerateDeterminant : Error {
  using Error::Error;
};

// A kernel-formula case was requested whose hypotheses the inputs violate.
struct CaseHypothesisViolated : Error {
  using Error::Error;
};

// build_completion called with parameters outside the family's domain.
struct InvalidFamilyParameters : Error {
  using Error::Error;
};

// A candidate symbol cannot be canonicalized into the term grammar.
struct GrammarParse : Error {
  using Error::Error;
};

// Malformed symbol JSON (carries file/field context in the message).
struct ParseError : Error {
  using Error::Error;
};

// A Blaschke zero on or outside the unit circle.
struct InvalidZero : Error {
  using Error::Error;
};

// A matrix symbol expected to be inner fails the sampled unitarity check.
struct NotInnerFunction : Error {
  using Error::Error;
};

}  // namespace hardy

#endif  // HARDY_ERRORS_HPP
