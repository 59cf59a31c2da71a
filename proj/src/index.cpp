// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#include <cuspdet/index.hpp>

#include <cuspdet/errors.hpp>
#include <cuspdet/specfun.hpp>

#include <boost/math/constants/constants.hpp>

namespace cuspdet::index {

long long index_dbar(int ell, const SurfaceType& st) {
  const long long l = ell, g = st.g, n = st.n;
  if (ell <= 0) return (2 * l - 1) * (g - 1) + l * n;
  return (2 * l - 1) * (g - 1) + (l - 1) * n;
}

long long dim_ker(int ell, const SurfaceType& st) {
  const long long l = ell, g = st.g, n = st.n;
  if (ell < 0) return 0;
  if (ell == 0) return 1;
  if (ell == 1) return g;
  return (2 * l - 1) * (g - 1) + n * (l - 1);
}

long long dim_coker(int ell, const SurfaceType& st) {
  const long long l = ell, g = st.g, n = st.n;
  if (ell < 0) return -(2 * l - 1) * (g - 1) - n * l;
  if (ell == 0) return g;
  if (ell == 1) return 1;
  return 0;
}

Rational eta_horizontal(int ell, const SurfaceType& st) {
  // n sign(ell - 1/2): -n for ell <= 0, +n for ell >= 1.
  return Rational(ell <= 0 ? -st.n : st.n);
}

long long divisor_degree(int ell, const SurfaceType& st) {
  const long long l = ell;
  return -(l - 1) * (2LL * st.g + st.n - 2);
}

namespace {

template <class R>
void transcendental_coeffs(int n, double& a_tilde, double& a_half) {
  const R sqrt_pi = sqrt(boost::math::constants::pi<R>());
  const R log2 = log(R(2));
  const R glog_mhalf = specfun::detail::gamma_log_real<R>(R(-1) / 2);
  const R at = R(n) / (4 * sqrt_pi);
  const R ah = R(n) / (2 * sqrt_pi) * (1 - log2 + glog_mhalf / (4 * sqrt_pi));
  a_tilde = static_cast<double>(at);
  a_half = static_cast<double>(ah);
}

}  // namespace

HeatCoefficients heat_coefficients(const SurfaceType& st, Precision prec) {
  HeatCoefficients hc;
  hc.a_m1 = Rational(-st.chi(), 2);  // (2g - 2 + n)/2
  hc.a_0 = Rational(st.chi(), 6);
  hc.a_m1_genus_reading = Rational(st.g - 1);
  if (prec == Precision::digits50)
    transcendental_coeffs<Real50>(st.n, hc.a_tilde_mhalf, hc.a_mhalf);
  else
    transcendental_coeffs<Real100>(st.n, hc.a_tilde_mhalf, hc.a_mhalf);
  return hc;
}

Rational zeta_at_zero(const SurfaceType& st, const Rational& s) {
  return Rational(st.chi()) * (Rational(1, 6) + s * (s - 1) / 2);
}

double zeta_at_zero(const SurfaceType& st, double s) {
  return st.chi() * (1.0 / 6.0 + s * (s - 1.0) / 2.0);
}

}  // namespace cuspdet::index
