// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#ifndef CUSPDET_PRECISION_HPP
#define CUSPDET_PRECISION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cuspdet {

// Internal working precisions.  Results are always reported as doubles
// (paired with an error bound), but the asymptotic identities checked at
// s = 50 cancel tens of digits, so all kernels run in extended precision.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;
using Complex50 = boost::multiprecision::cpp_complex_50;
using Complex100 = boost::multiprecision::cpp_complex_100;

// Exact rational arithmetic for Bernoulli data, index formulas and the
// graded series engine.  No floating point enters these code paths.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// User-selectable working precision tier.  digits50 is the default and is
// ample for every documented tolerance; digits100 is exposed through the
// CLI --digits flag for headroom experiments.
enum class Precision { digits50, digits100 };

inline Precision precision_from_digits(int digits) {
  return digits > 50 ? Precision::digits100 : Precision::digits50;
}

} // namespace cuspdet

#endif // CUSPDET_PRECISION_HPP
