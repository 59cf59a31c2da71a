// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#ifndef CUSPDET_ERRORS_HPP
#define CUSPDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cuspdet {

// Base class for every exception thrown by the library.  All computation
// errors derive from this so callers (and the CLI) can distinguish "the
// input was mathematically out of range" from genuine bugs.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input lies outside the declared domain of an operation (e.g. s <= 1 for
// the Selberg zeta product, or an invalid surface type).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation requested exactly at a pole of a meromorphic function
// (Gamma, digamma, Gamma_log at non-positive integers; phi_horn at 1/2).
class PoleError : public Error {
public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

// Two graded series with different generator alphabets or truncation
// degrees were combined.
class AlphabetMismatch : public Error {
public:
  explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

// A series operation that only admits one family of generators (fiber
// integration over psi_{n+1}) received a series with other generators.
class MixedGenerators : public Error {
public:
  explicit MixedGenerators(const std::string& what) : Error(what) {}
};

// Name passed to builtin_group() is not one of the built-in presentations.
class UnknownGroup : public Error {
public:
  explicit UnknownGroup(const std::string& what) : Error(what) {}
};

// geodesic_length() called on a non-hyperbolic Moebius transformation.
class NotHyperbolic : public Error {
public:
  explicit NotHyperbolic(const std::string& what) : Error(what) {}
};

// The word enumerator found an elliptic element (|trace| < 2).  The
// built-in groups are torsion-free, so this always indicates that the
// presentation handed to the enumerator is not one of them.
class EllipticFound : public Error {
public:
  explicit EllipticFound(const std::string& what) : Error(what) {}
};

// A numerical extrapolation table failed to converge (e.g. Z'(1)
// extrapolation on a spectrum whose zeta function has no zero at s=1).
class DivergedError : public Error {
public:
  explicit DivergedError(const std::string& what) : Error(what) {}
};

// Integer matrix arithmetic would overflow the 64-bit fast path (word
// cutoffs far beyond the supported enumeration range).
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A spectrum file could not be read, written, or parsed (missing file,
// malformed JSON line, or a field of the wrong type).
class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace cuspdet

#endif // CUSPDET_ERRORS_HPP
