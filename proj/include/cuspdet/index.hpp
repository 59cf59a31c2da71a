// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Exact index-theory bookkeeping for the d-bar operator twisted by the
// ell-th power of the canonical bundle on a genus-g surface with n cusps:
// index, kernel and cokernel dimensions, the horizontal eta term, divisor
// degrees, and the renormalized heat-trace coefficients that feed the
// determinant asymptotics.  Everything integer/rational is exact; the two
// transcendental coefficients are evaluated through specfun.

#ifndef CUSPDET_INDEX_HPP
#define CUSPDET_INDEX_HPP

#include <cuspdet/precision.hpp>
#include <cuspdet/surface.hpp>

namespace cuspdet::index {

// Coefficients of the renormalized heat trace
//
//   RTr(e^(-t Delta)) = a_m1/t + a_tilde_mhalf log(t)/sqrt(t)
//                       + a_mhalf/sqrt(t) + a_0 + O(sqrt t),  t -> 0+.
//
// a_m1 and a_0 are exact rationals; the sqrt-t coefficients are
// transcendental and carried as doubles (their defining expressions are
// n/(4 sqrt pi) and (n/(2 sqrt pi))(1 - log 2 + Gamma_log(-1/2)/(4 sqrt pi))).
struct HeatCoefficients {
  Rational a_m1;         // 1/t coefficient, -chi/2 (see note below)
  Rational a_0;          // constant coefficient, chi/6
  double a_tilde_mhalf = 0.0;  // log(t)/sqrt(t) coefficient
  double a_mhalf = 0.0;        // 1/sqrt(t) coefficient

  // The source prints "a_{-1} = g - 1 = -chi/2", which is inconsistent for
  // n > 0 (chi = 2 - 2g - n).  The heat-trace normalization k_{-1} area /
  // (4 pi t) forces a_m1 = -chi/2 = (2g - 2 + n)/2, which is what a_m1
  // holds; the literal g - 1 reading is kept alongside for comparison.
  Rational a_m1_genus_reading;  // g - 1
};

// Index of d-bar_ell (Riemann-Roch with cusps):
//   (2 ell - 1)(g - 1) + ell n        for ell <= 0,
//   (2 ell - 1)(g - 1) + (ell - 1) n  for ell >  0.
long long index_dbar(int ell, const SurfaceType& st);

// dim ker d-bar_ell: 0 (ell < 0), 1 (ell = 0), g (ell = 1),
// (2 ell - 1)(g - 1) + n(ell - 1) (ell >= 2).
long long dim_ker(int ell, const SurfaceType& st);

// dim coker d-bar_ell: -(2 ell - 1)(g - 1) - n ell (ell < 0), g (ell = 0),
// 1 (ell = 1), 0 (ell >= 2).
long long dim_coker(int ell, const SurfaceType& st);

// Eta invariant of the horizontal cusp operator: n sign(ell - 1/2);
// never zero for integer ell (and 0 when n = 0).
Rational eta_horizontal(int ell, const SurfaceType& st);

// deg(K-bar tensor L_D^(-1) tensor K-bar^(-ell)) = -(ell - 1)(2g + n - 2).
long long divisor_degree(int ell, const SurfaceType& st);

// Heat coefficients of the surface type (see HeatCoefficients).
HeatCoefficients heat_coefficients(const SurfaceType& st,
                                   Precision prec = Precision::digits50);

// zeta_{Delta_Sigma}(0; s(s-1)) = chi (1/6 + s(s-1)/2).  Exact overload
// for rational s; double overload for convenience at irrational s.
Rational zeta_at_zero(const SurfaceType& st, const Rational& s);
double zeta_at_zero(const SurfaceType& st, double s);

}  // namespace cuspdet::index

#endif  // CUSPDET_INDEX_HPP
