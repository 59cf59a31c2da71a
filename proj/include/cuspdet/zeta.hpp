// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Selberg zeta function and companions evaluated from a length spectrum:
//
//   log Z(s)  = sum over classes gamma, k >= 0 of log(1 - e^{-(s+k) l(gamma)})
//   (log Z)'  = sum of l e^{-(s+k)l} / (1 - e^{-(s+k)l})
//   Z'(1)     = extrapolated from Z(1+eps)/eps (simple zero assumed)
//   phi_H(s)  = -log 2 - Psi(s + 1/2) + 1/(2s - 1)
//   Z_cusp(s) = sqrt(2s - 1) / (2^s Gamma(s + 1/2))
//
// Each spectrum entry is one conjugacy class; entries sharing a length
// (within 1e-9) are binned so the inner k-sum is evaluated once per
// distinct length and weighted by the bin size.  The multiplicity field on
// the entries is diagnostic and always equals that bin size for enumerated
// spectra.

#ifndef CUSPDET_ZETA_HPP
#define CUSPDET_ZETA_HPP

#include <string>
#include <vector>

#include <cuspdet/eval.hpp>
#include <cuspdet/fuchsian.hpp>

namespace cuspdet::zeta {

struct ZetaEval {
  double log_value = 0.0;      // log Z(s), or (log Z)'(s) for the derivative
  double tail_estimate = 0.0;  // heuristic bound on the discarded tail, >= 0
  int k_cut = 0;               // largest inner-product truncation used
  std::vector<std::string> warnings;  // e.g. EmptySpectrumWarning
};

// log Z(s) for s > 1 (DomainError otherwise).  The inner product over k is
// truncated per geodesic once its geometric tail drops below 1e-16; the
// reported tail_estimate e^{-(s-1)L}/(1 - e^{-(s-1)}) * (entries in the top
// unit shell) is heuristic, not certified.  An empty spectrum yields 0 with
// an EmptySpectrumWarning entry in `warnings`.
ZetaEval log_selberg_zeta(const fuchsian::LengthSpectrum& sp, double s);

// Termwise derivative d/ds log Z(s) for s > 1; same conventions.  All terms
// are positive, so the value is > 0 on a nonempty spectrum.
ZetaEval zeta_log_derivative(const fuchsian::LengthSpectrum& sp, double s);

// Z'(1) by polynomial extrapolation of exp(log Z(1+eps))/eps to eps -> 0,
// assuming Z has a simple zero at s = 1.  The grid must be strictly
// decreasing with >= 3 points in (0, 1/2] (DomainError otherwise).
// DivergedError on an empty spectrum (Z is identically 1, so 1/eps has
// nothing to extrapolate) or when the table overflows.  abs_error is the
// final extrapolation spread; on truncated spectra the missing product
// tail acts like a residual 1/eps term, so the spread stays large — it
// shrinks as the cutoff grows and is the honest error bar.  The result is
// low-confidence by construction (evaluation at the boundary of
// convergence) and callers should surface that caveat with the value.
EvalResult zeta_prime_at_1(const fuchsian::LengthSpectrum& sp,
                           const std::vector<double>& eps_grid);

// Horn-function scattering term; PoleError at s = 1/2 and where s + 1/2 is
// a non-positive integer.
EvalResult phi_horn(double s);

// Cusp zeta factor for s > 1/2 (DomainError otherwise); z_cusp_log returns
// log Z_cusp(s), which stays representable when the value underflows.
EvalResult z_cusp(double s);
EvalResult z_cusp_log(double s);

}  // namespace cuspdet::zeta

#endif  // CUSPDET_ZETA_HPP
