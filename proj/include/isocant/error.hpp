#pragma once

#include <stdexcept>

namespace isocant {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside its documented domain (e.g. a < 0 or a >= ell).
struct BadParams : Error { using Error::Error; };

// Operands or points whose dimensions do not agree.
struct DimensionMismatch : Error { using Error::Error; };

// Enumeration requested beyond the supported dimension cap.
struct DimensionTooLarge : Error { using Error::Error; };

// Sum or difference of surds over distinct squarefree radicands.
struct IncompatibleRadicands : Error { using Error::Error; };

// Squarefree radicand would not fit in a signed 64-bit integer.
struct Overflow : Error { using Error::Error; };

// Matrix has no inverse.
struct Singular : Error { using Error::Error; };

struct NotSquare : Error { using Error::Error; };

// Facet identifier that does not name a facet of the body.
struct BadFacet : Error { using Error::Error; };

struct TooManyGenerators : Error { using Error::Error; };

// Feasible set of a halfspace system has no vertex / is unbounded.
struct Unbounded : Error { using Error::Error; };

// Sampling box with an inverted bound pair.
struct BadBox : Error { using Error::Error; };

// A clause of the positivity certificate does not hold.
struct CertificateFailure : Error { using Error::Error; };

} // namespace isocant
