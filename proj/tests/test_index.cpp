// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Index-theory tests: exact table identities over a wide sweep, duality,
// closed forms, and the heat-trace coefficients recomputed here from their
// defining expressions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <cuspdet/errors.hpp>
#include <cuspdet/index.hpp>
#include <cuspdet/specfun.hpp>
#include <cuspdet/surface.hpp>

using namespace cuspdet;
using namespace cuspdet::index;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("surface type validation") {
  CHECK_THROWS_AS(SurfaceType(0, 2), DomainError);
  CHECK_THROWS_AS(SurfaceType(1, 0), DomainError);
  CHECK_THROWS_AS(SurfaceType(-1, 5), DomainError);
  const SurfaceType st(1, 1);
  CHECK(st.chi() == -1);
  const SurfaceType sphere3(0, 3);
  CHECK(sphere3.chi() == -1);
  CHECK(SurfaceType(2, 0).chi() == -2);
}

TEST_CASE("index equals kernel minus cokernel over a wide sweep") {
  for (int g = 0; g <= 8; ++g)
    for (int n = 0; n <= 8; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      for (int ell = -8; ell <= 8; ++ell) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(ell);
        const long long idx = index_dbar(ell, st);
        const long long ker = dim_ker(ell, st);
        const long long coker = dim_coker(ell, st);
        CHECK(idx == ker - coker);
        CHECK(ker >= 0);
        CHECK(coker >= 0);
      }
    }
}

TEST_CASE("duality pairs ell with 1 - ell") {
  for (int g = 0; g <= 8; ++g)
    for (int n = 0; n <= 8; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      for (int ell = -8; ell <= 8; ++ell) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(ell);
        CHECK(dim_coker(ell, st) == dim_ker(1 - ell, st));
        CHECK(index_dbar(ell, st) == -index_dbar(1 - ell, st));
      }
    }
}

TEST_CASE("index closed form with the half-integer shift") {
  for (int g = 0; g <= 8; ++g)
    for (int n = 0; n <= 8; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      for (int ell = -8; ell <= 8; ++ell) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(ell);
        const int sign = ell <= 0 ? 1 : -1;
        const Rational closed = (Rational(1, 2) - ell) * st.chi() +
                                Rational(n * sign, 2);
        CHECK(closed == Rational(index_dbar(ell, st)));
      }
    }
}

TEST_CASE("kernel dimensions at the distinguished weights") {
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 5; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      CAPTURE(g);
      CAPTURE(n);
      CHECK(dim_ker(-2, st) == 0);
      CHECK(dim_ker(-1, st) == 0);
      CHECK(dim_ker(0, st) == 1);   // constants
      CHECK(dim_ker(1, st) == g);   // holomorphic one-forms
      CHECK(dim_coker(0, st) == g);
      CHECK(dim_coker(1, st) == 1);
      for (int ell = 2; ell <= 6; ++ell) {
        CHECK(dim_coker(ell, st) == 0);
        CHECK(dim_ker(ell, st) ==
              (2LL * ell - 1) * (g - 1) + static_cast<long long>(n) * (ell - 1));
      }
    }
}

TEST_CASE("three-cusped sphere table") {
  const SurfaceType st(0, 3);
  CHECK(index_dbar(0, st) == 1);
  CHECK(dim_ker(0, st) == 1);
  CHECK(dim_coker(0, st) == 0);
  CHECK(index_dbar(1, st) == -1);
  CHECK(index_dbar(-2, st) == -1);
  CHECK(index_dbar(3, st) == 1);
}

TEST_CASE("horizontal eta term") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 6; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      for (int ell = -4; ell <= 4; ++ell) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(ell);
        const Rational eta = eta_horizontal(ell, st);
        CHECK(eta == Rational(ell >= 1 ? n : -n));
        if (n > 0) CHECK(eta != 0);
      }
    }
}

TEST_CASE("divisor degree") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 6; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      for (int ell = -4; ell <= 4; ++ell) {
        CAPTURE(g);
        CAPTURE(n);
        CAPTURE(ell);
        CHECK(divisor_degree(ell, st) ==
              -static_cast<long long>(ell - 1) * (2 * g + n - 2));
      }
    }
  CHECK(divisor_degree(0, SurfaceType(0, 3)) == 1);
  CHECK(divisor_degree(1, SurfaceType(0, 3)) == 0);
}

TEST_CASE("heat coefficients: exact entries") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 6; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      CAPTURE(g);
      CAPTURE(n);
      const auto hc = heat_coefficients(st);
      CHECK(hc.a_m1 == Rational(2 * g - 2 + n, 2));
      CHECK(hc.a_m1 == -Rational(st.chi(), 2));
      CHECK(hc.a_0 == Rational(st.chi(), 6));
      CHECK(hc.a_m1_genus_reading == Rational(g - 1));
      // The two readings disagree exactly when there are cusps.
      CHECK((hc.a_m1 == hc.a_m1_genus_reading) == (n == 0));
    }
}

TEST_CASE("heat coefficients: transcendental entries from their formulas") {
  const double sqrt_pi = std::sqrt(kPi);
  const double glog = specfun::gamma_log(-0.5).value;
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 5; ++n) {
      if (2 * g + n < 3) continue;
      const SurfaceType st(g, n);
      CAPTURE(g);
      CAPTURE(n);
      const auto hc = heat_coefficients(st);
      CHECK(std::abs(hc.a_tilde_mhalf - n / (4.0 * sqrt_pi)) < 1e-14);
      const double expect_mhalf =
          (n / (2.0 * sqrt_pi)) *
          (1.0 - std::log(2.0) + glog / (4.0 * sqrt_pi));
      CHECK(std::abs(hc.a_mhalf - expect_mhalf) < 1e-14);
      if (n == 0) {
        CHECK(hc.a_tilde_mhalf == 0.0);
        CHECK(hc.a_mhalf == 0.0);
      }
    }
}

TEST_CASE("heat coefficients: pinned one-cusp torus values") {
  const auto hc = heat_coefficients(SurfaceType(1, 1));
  CHECK(hc.a_m1 == Rational(1, 2));
  CHECK(hc.a_0 == Rational(-1, 6));
  CHECK(std::abs(hc.a_tilde_mhalf - 0.14104739588693907) < 1e-15);
  CHECK(std::abs(hc.a_mhalf - 0.081414766399509272) < 1e-15);
  // Linear scaling in the cusp count.
  const auto hc3 = heat_coefficients(SurfaceType(0, 3));
  CHECK(std::abs(hc3.a_tilde_mhalf - 3.0 * hc.a_tilde_mhalf) < 1e-15);
  CHECK(std::abs(hc3.a_mhalf - 3.0 * hc.a_mhalf) < 1e-15);
}

TEST_CASE("heat coefficients agree across precision tiers") {
  const auto a = heat_coefficients(SurfaceType(1, 2));
  const auto b = heat_coefficients(SurfaceType(1, 2), Precision::digits100);
  CHECK(a.a_m1 == b.a_m1);
  CHECK(a.a_0 == b.a_0);
  CHECK(std::abs(a.a_tilde_mhalf - b.a_tilde_mhalf) < 1e-16);
  CHECK(std::abs(a.a_mhalf - b.a_mhalf) < 1e-15);
}

TEST_CASE("zeta at zero") {
  const SurfaceType torus(1, 1);
  // chi (1/6 + s(s-1)/2) at s = 2 with chi = -1.
  CHECK(zeta_at_zero(torus, Rational(2)) == Rational(-7, 6));
  CHECK(zeta_at_zero(torus, Rational(1)) == Rational(-1, 6));
  CHECK(zeta_at_zero(torus, Rational(1, 2)) ==
        Rational(-1) * (Rational(1, 6) - Rational(1, 8)));
  CHECK(std::abs(zeta_at_zero(torus, 2.0) - (-7.0 / 6.0)) < 1e-15);

  const SurfaceType g2(2, 0);
  CHECK(zeta_at_zero(g2, Rational(3)) ==
        Rational(-2) * (Rational(1, 6) + Rational(3)));
  // Double overload tracks the exact one on a sweep.
  for (double s : {1.25, 2.0, 3.5, 10.0}) {
    CAPTURE(s);
    const double exact = -2.0 * (1.0 / 6.0 + s * (s - 1.0) / 2.0);
    CHECK(std::abs(zeta_at_zero(g2, s) - exact) < 1e-12);
  }
}
