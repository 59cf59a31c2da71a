// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#ifndef CUSPDET_EVAL_HPP
#define CUSPDET_EVAL_HPP

#include <cmath>
#include <complex>

namespace cuspdet {

// A scalar evaluation together with an a-posteriori bound on its rounding
// and truncation error.  The bound covers the internal extended-precision
// computation plus the final rounding to double; it is an estimate in the
// usual numerical-analysis sense (truncation bounded by the first omitted
// series term), not an interval-arithmetic certificate.
struct EvalResult {
  double value = 0.0;
  double abs_error = 0.0;

  bool finite() const { return std::isfinite(value) && std::isfinite(abs_error); }
};

// Same contract for complex-valued evaluations (log Gamma and digamma
// accept complex arguments).  abs_error bounds |computed - exact|.
struct ComplexEvalResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error = 0.0;
};

} // namespace cuspdet

#endif // CUSPDET_EVAL_HPP
