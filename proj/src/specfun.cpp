// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Implementation notes
// --------------------
// Every floating-point function here follows the same pattern: a kernel
// templated on an extended-precision real type (50 or 100 decimal digits)
// does the actual work, and a thin double-facing wrapper adds domain
// checks and the reported error bound.  The kernels use
//
//   * the Stirling/Binet asymptotic series with Bernoulli coefficients,
//     entered after shifting the argument past a digits-dependent
//     threshold (DLMF 5.11.1, 5.11.2),
//   * the corresponding asymptotic expansion of log G (Barnes) with a
//     Gamma-recurrence descent for small arguments (DLMF 5.17.5),
//   * Euler-Maclaurin summation for zeta and zeta' with analytic
//     s-derivatives of every term (DLMF 25.2.9 rearranged),
//
// and exact rational Bernoulli numbers from the classical recurrence
// sum_j C(m+1, j) B_j = 0.  Coefficient tables are function-local
// constants: initialized once (thread-safe per [stmt.dcl]) and immutable
// afterwards, so concurrent callers share no mutable state.

#include <cuspdet/specfun.hpp>

#include <cuspdet/errors.hpp>

#include <boost/math/constants/constants.hpp>

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace cuspdet::specfun {

namespace {

namespace bmp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Small double-level utilities
// ---------------------------------------------------------------------------

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Half an ulp of v: the representation error of the returned double.
double half_ulp(double v) {
  double a = std::fabs(v);
  if (!std::isfinite(a)) return 0.0;
  if (a < DBL_MIN) return DBL_MIN * DBL_EPSILON;
  return (std::nextafter(a, HUGE_VAL) - a) * 0.5;
}

// Map a complex number's real type.
template <class C> struct real_of;
template <> struct real_of<Complex50> { using type = Real50; };
template <> struct real_of<Complex100> { using type = Real100; };

// Internal truncation/rounding allowance of an R-typed kernel result:
// a generous multiple of the working epsilon, negligible against the
// double rounding that dominates the reported bound.
template <class R>
double internal_error(const R& v) {
  const R bound = (abs(v) + 1) * std::numeric_limits<R>::epsilon() * 256;
  return static_cast<double>(bound);
}

template <class R>
EvalResult round_to_eval(const R& v) {
  EvalResult r;
  r.value = static_cast<double>(v);
  r.abs_error = half_ulp(r.value) + internal_error(v);
  return r;
}

template <class C>
ComplexEvalResult round_to_eval_complex(const C& v) {
  using R = typename real_of<C>::type;
  ComplexEvalResult r;
  const double re = static_cast<double>(v.real());
  const double im = static_cast<double>(v.imag());
  r.value = std::complex<double>(re, im);
  // Componentwise rounding is at most half an ulp each; bound the
  // Euclidean error by the sum.
  const R mag = abs(v);
  r.abs_error = half_ulp(re) + half_ulp(im) + internal_error(mag);
  return r;
}

// Argument-shift threshold for the Stirling/Binet and Barnes asymptotic
// series: the smallest term of the series at |z| = T is of order
// e^(-2 pi T), so 4/5 of the working digit count keeps truncation far
// below the target precision.
template <class R>
R asymptotic_threshold() {
  const int d = std::numeric_limits<R>::digits10;
  return R(d < 50 ? 40 : (d * 4) / 5);
}

// ---------------------------------------------------------------------------
// Exact Bernoulli numbers
// ---------------------------------------------------------------------------

std::vector<Rational> bernoulli_exact(int M) {
  std::vector<Rational> B(static_cast<std::size_t>(M) + 1);
  B[0] = 1;
  for (int m = 1; m <= M; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * B[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);  // -> C(m+1, j+1), exact
    }
    B[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return B;
}

// Shared exact table; sized to cover every asymptotic series below.
constexpr int kBernoulliTableMax = 200;

const std::vector<Rational>& exact_bernoulli_table() {
  static const std::vector<Rational> table = bernoulli_exact(kBernoulliTableMax);
  return table;
}

// ---------------------------------------------------------------------------
// Per-precision coefficient tables
// ---------------------------------------------------------------------------

template <class R>
struct Tables {
  std::vector<R> binet;    // binet[k]  = B_{2k} / ((2k-1)(2k)),        k >= 1
  std::vector<R> psi;      // psi[k]    = B_{2k} / (2k),                k >= 1
  std::vector<R> barnes;   // barnes[k] = B_{2k+2} / (2k(2k+2)),        k >= 1
  std::vector<R> em;       // em[k]     = B_{2k} / (2k)!,               k >= 1
  R half_log_two_pi;
  R log_two_pi;
  R pi;
  R euler_gamma;
  R ln_glaisher;           // log A, from zeta'(2) by Euler-Maclaurin
};

// Euler-Maclaurin zeta(s) and zeta'(s); coefficient vector passed in so
// the routine can run during table construction.
template <class R>
void zeta_em_core(const R& s, const std::vector<R>& em, R& z, R& zp) {
  const int digits = std::numeric_limits<R>::digits10;
  const int N = digits < 50 ? 60 : digits + 10;
  const R eps = std::numeric_limits<R>::epsilon();

  R head = 0, dhead = 0;
  for (int n = 1; n < N; ++n) {
    const R t = pow(R(n), -s);
    head += t;
    dhead -= log(R(n)) * t;
  }
  const R rn = R(N);
  const R logN = log(rn);
  const R n_one_minus_s = pow(rn, 1 - s);
  const R n_minus_s = n_one_minus_s / rn;
  const R sm1 = s - 1;

  z = head + n_one_minus_s / sm1 + n_minus_s / 2;
  zp = dhead - n_one_minus_s / (sm1 * sm1) - logN * n_one_minus_s / sm1
       - logN * n_minus_s / 2;

  // Correction terms with the Pochhammer product and its s-derivative
  // accumulated by the product rule (robust when a factor vanishes).
  R P = s, dP = 1;                       // poch(s,1), d/ds poch(s,1)
  R npow = n_minus_s / rn;               // N^(-s-1)
  const R inv_n2 = 1 / (rn * rn);
  R prev = std::numeric_limits<R>::max();
  const int K = static_cast<int>(em.size()) - 1;
  for (int k = 1; k <= K; ++k) {
    const R term = em[static_cast<std::size_t>(k)] * P * npow;
    const R dterm =
        em[static_cast<std::size_t>(k)] * (dP - P * logN) * npow;
    z += term;
    zp += dterm;
    const R sz = abs(term) + abs(dterm);
    if (sz < eps * (abs(z) + abs(zp) + 1)) break;
    if (sz > prev) break;  // past the smallest term of the asymptotic tail
    prev = sz;
    dP = dP * (s + 2 * k - 1) + P;
    P = P * (s + 2 * k - 1);
    dP = dP * (s + 2 * k) + P;
    P = P * (s + 2 * k);
    npow *= inv_n2;
  }
}

template <class R>
Tables<R> make_tables() {
  const auto& B = exact_bernoulli_table();
  Tables<R> t;
  t.pi = boost::math::constants::pi<R>();
  t.euler_gamma = boost::math::constants::euler<R>();
  t.log_two_pi = log(2 * t.pi);
  t.half_log_two_pi = t.log_two_pi / 2;

  const int kmax = kBernoulliTableMax / 2 - 2;
  t.binet.resize(static_cast<std::size_t>(kmax) + 1);
  t.psi.resize(static_cast<std::size_t>(kmax) + 1);
  t.barnes.resize(static_cast<std::size_t>(kmax) + 1);
  t.em.resize(static_cast<std::size_t>(kmax) + 1);
  R fact = 2;  // (2k)! running value, starts at 2! for k = 1
  for (int k = 1; k <= kmax; ++k) {
    const R b2k = static_cast<R>(B[static_cast<std::size_t>(2 * k)]);
    const R b2k2 = static_cast<R>(B[static_cast<std::size_t>(2 * k + 2)]);
    t.binet[static_cast<std::size_t>(k)] = b2k / (R(2 * k - 1) * R(2 * k));
    t.psi[static_cast<std::size_t>(k)] = b2k / R(2 * k);
    t.barnes[static_cast<std::size_t>(k)] =
        b2k2 / (R(2 * k) * R(2 * k + 2));
    t.em[static_cast<std::size_t>(k)] = b2k / fact;
    fact *= R(2 * k + 1) * R(2 * k + 2);
  }

  // log A = [gamma + log 2pi - (6/pi^2) zeta'(2)] / 12, a rearrangement of
  // the functional-equation identity zeta'(2) = (pi^2/6)(gamma + log 2pi
  // - 12 log A).
  R z2, zp2;
  zeta_em_core(R(2), t.em, z2, zp2);
  t.ln_glaisher =
      (t.euler_gamma + t.log_two_pi - 6 / (t.pi * t.pi) * zp2) / 12;
  return t;
}

template <class R>
const Tables<R>& tables() {
  static const Tables<R> t = make_tables<R>();
  return t;
}

// sin(pi z) and cot(pi z) with range reduction (exact periodicity in the
// integer part keeps accuracy for large arguments).
template <class R>
R sinpi_real(const R& z) {
  const R k = round(z);
  const R r = z - k;
  const R s = sin(tables<R>().pi * r);
  const long long ki = k.template convert_to<long long>();
  return (ki % 2 == 0) ? s : -s;
}

template <class R>
R cotpi_real(const R& z) {
  const R r = z - round(z);  // cot has period 1
  const R arg = tables<R>().pi * r;
  return cos(arg) / sin(arg);
}

template <class C>
C cotpi_complex(const C& z) {
  using R = typename real_of<C>::type;
  const C r = z - C(round(z.real()));
  const C arg = tables<R>().pi * r;
  return cos(arg) / sin(arg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Extended-precision kernels
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
R log_gamma_real(const R& zin) {
  const auto& tb = tables<R>();
  const R T = asymptotic_threshold<R>();
  const R eps = std::numeric_limits<R>::epsilon();

  R z = zin;
  R shift = 0;
  while (z < T) {
    shift += log(z);
    z += 1;
  }
  const R lz = log(z);
  R res = (z - R(1) / 2) * lz - z + tb.half_log_two_pi;

  const R inv_z2 = 1 / (z * z);
  R p = 1 / z;  // z^(-(2k-1)) running power
  for (std::size_t k = 1; k < tb.binet.size(); ++k) {
    const R term = tb.binet[k] * p;
    res += term;
    if (abs(term) < eps * (abs(res) + 1)) break;
    p *= inv_z2;
  }
  return res - shift;
}

template <class R>
R digamma_real(const R& zin) {
  const auto& tb = tables<R>();
  const R T = asymptotic_threshold<R>();
  const R eps = std::numeric_limits<R>::epsilon();

  R z = zin;
  R extra = 0;
  if (z < R(1) / 2) {
    // Reflection: Psi(z) = Psi(1-z) - pi cot(pi z).
    extra = -tb.pi * cotpi_real(z);
    z = 1 - z;
  }
  R shift = 0;
  while (z < T) {
    shift += 1 / z;
    z += 1;
  }
  R res = log(z) - 1 / (2 * z);
  const R inv_z2 = 1 / (z * z);
  R p = inv_z2;  // z^(-2k) running power
  for (std::size_t k = 1; k < tb.psi.size(); ++k) {
    const R term = tb.psi[k] * p;
    res -= term;
    if (abs(term) < eps * (abs(res) + 1)) break;
    p *= inv_z2;
  }
  return res - shift + extra;
}

template <class R>
R gamma_real(const R& z) {
  if (z > 0) return exp(log_gamma_real(z));
  // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)); carries the sign.
  const auto& tb = tables<R>();
  return tb.pi / (sinpi_real(z) * exp(log_gamma_real(1 - z)));
}

template <class R>
R gamma_log_real(const R& z) {
  if (z > 0) return gamma_real(z) * digamma_real(z);
  // Backward recurrence Gamma_log(z) = (Gamma_log(z+1) - Gamma(z)) / z,
  // seeded on the positive axis where the integral representation (and
  // hence Gamma * Psi) is valid.
  const int m = static_cast<int>(floor(-z).template convert_to<long long>()) + 1;
  R g = gamma_log_real(z + m);
  for (int j = m - 1; j >= 0; --j) {
    const R zj = z + j;
    g = (g - gamma_real(zj)) / zj;
  }
  return g;
}

template <class R>
R log_barnes_g(const R& s) {
  const auto& tb = tables<R>();
  const R T = asymptotic_threshold<R>();
  const R eps = std::numeric_limits<R>::epsilon();

  // Descent: log G(s) = log G(s + m) - sum_{j<m} log Gamma(s + j).
  R w = s;
  R desc = 0;
  while (w < T) {
    desc += log_gamma_real(w);
    w += 1;
  }
  // Asymptotic series for log G(z + 1) at z = w - 1.
  const R z = w - 1;
  const R lz = log(z);
  R res = z * z / 2 * (lz - R(3) / 2) + z / 2 * tb.log_two_pi + R(1) / 12
          - tb.ln_glaisher - lz / 12;
  const R inv_z2 = 1 / (z * z);
  R p = inv_z2;  // z^(-2k) running power
  for (std::size_t k = 1; k < tb.barnes.size(); ++k) {
    const R term = tb.barnes[k] * p;
    res += term;
    if (abs(term) < eps * (abs(res) + 1)) break;
    p *= inv_z2;
  }
  return res - desc;
}

template <class R>
R log_gamma2_real(const R& s) {
  // Gamma_2 = 1/G in the normalization pinned by the asymptotic tests.
  return -log_barnes_g(s);
}

template <class C>
C log_gamma_complex(const C& zin) {
  using R = typename real_of<C>::type;
  const auto& tb = tables<R>();
  const R T = asymptotic_threshold<R>();
  const R eps = std::numeric_limits<R>::epsilon();

  // Downward recurrence with principal logs: both sides of
  // log Gamma(z) = log Gamma(z+1) - Log z are analytic on the cut plane
  // and agree on the positive axis, so the recurrence preserves the
  // principal branch everywhere off the cut.
  C z = zin;
  C shift = 0;
  while (z.real() < T) {
    shift += log(z);
    z += 1;
  }
  C res = (z - C(R(1) / 2)) * log(z) - z + C(tb.half_log_two_pi);
  const C inv_z2 = C(1) / (z * z);
  C p = C(1) / z;
  for (std::size_t k = 1; k < tb.binet.size(); ++k) {
    const C term = C(tb.binet[k]) * p;
    res += term;
    if (abs(term) < eps * (abs(res) + 1)) break;
    p *= inv_z2;
  }
  return res - shift;
}

template <class C>
C digamma_complex(const C& zin) {
  using R = typename real_of<C>::type;
  const auto& tb = tables<R>();
  const R T = asymptotic_threshold<R>();
  const R eps = std::numeric_limits<R>::epsilon();

  C z = zin;
  C extra = 0;
  if (z.real() < R(1) / 2) {
    extra = -C(tb.pi) * cotpi_complex(z);
    z = C(1) - z;
  }
  C shift = 0;
  while (z.real() < T) {
    shift += C(1) / z;
    z += 1;
  }
  C res = log(z) - C(1) / (2 * z);
  const C inv_z2 = C(1) / (z * z);
  C p = inv_z2;
  for (std::size_t k = 1; k < tb.psi.size(); ++k) {
    const C term = C(tb.psi[k]) * p;
    res -= term;
    if (abs(term) < eps * (abs(res) + 1)) break;
    p *= inv_z2;
  }
  return res - shift + extra;
}

template <class R>
R zeta_em(const R& s) {
  R z, zp;
  zeta_em_core(s, tables<R>().em, z, zp);
  return z;
}

template <class R>
R zeta_prime_em(const R& s) {
  R z, zp;
  zeta_em_core(s, tables<R>().em, z, zp);
  return zp;
}

template <class R>
R zeta_prime_minus_one_r() {
  return R(1) / 12 - tables<R>().ln_glaisher;
}

template <class R>
R constant_e_r() {
  const auto& tb = tables<R>();
  return -R(1) / 4 - tb.half_log_two_pi + 2 * zeta_prime_minus_one_r<R>();
}

template <class R>
R bernoulli_r(int m) {
  if (m <= kBernoulliTableMax)
    return static_cast<R>(exact_bernoulli_table()[static_cast<std::size_t>(m)]);
  return static_cast<R>(bernoulli_exact(m)[static_cast<std::size_t>(m)]);
}

// Explicit instantiations: the only precisions reachable from the API.
template Real50 log_gamma_real<Real50>(const Real50&);
template Real100 log_gamma_real<Real100>(const Real100&);
template Real50 digamma_real<Real50>(const Real50&);
template Real100 digamma_real<Real100>(const Real100&);
template Real50 gamma_real<Real50>(const Real50&);
template Real100 gamma_real<Real100>(const Real100&);
template Real50 gamma_log_real<Real50>(const Real50&);
template Real100 gamma_log_real<Real100>(const Real100&);
template Real50 log_barnes_g<Real50>(const Real50&);
template Real100 log_barnes_g<Real100>(const Real100&);
template Real50 log_gamma2_real<Real50>(const Real50&);
template Real100 log_gamma2_real<Real100>(const Real100&);
template Complex50 log_gamma_complex<Complex50>(const Complex50&);
template Complex100 log_gamma_complex<Complex100>(const Complex100&);
template Complex50 digamma_complex<Complex50>(const Complex50&);
template Complex100 digamma_complex<Complex100>(const Complex100&);
template Real50 zeta_em<Real50>(const Real50&);
template Real100 zeta_em<Real100>(const Real100&);
template Real50 zeta_prime_em<Real50>(const Real50&);
template Real100 zeta_prime_em<Real100>(const Real100&);
template Real50 zeta_prime_minus_one_r<Real50>();
template Real100 zeta_prime_minus_one_r<Real100>();
template Real50 constant_e_r<Real50>();
template Real100 constant_e_r<Real100>();
template Real50 bernoulli_r<Real50>(int);
template Real100 bernoulli_r<Real100>(int);

}  // namespace detail

// ---------------------------------------------------------------------------
// Public wrappers
// ---------------------------------------------------------------------------

namespace {

void check_not_pole(double z, const char* fn) {
  if (is_nonpositive_integer(z))
    throw PoleError(std::string(fn) + ": pole at z = " + format_double(z));
}

void check_not_pole(std::complex<double> z, const char* fn) {
  if (z.imag() == 0.0) check_not_pole(z.real(), fn);
}

template <class F50, class F100>
EvalResult dispatch_real(Precision prec, F50&& f50, F100&& f100) {
  return prec == Precision::digits50 ? round_to_eval(f50())
                                     : round_to_eval(f100());
}

}  // namespace

EvalResult log_gamma(double z, Precision prec) {
  check_not_pole(z, "log_gamma");
  if (z < 0)
    throw DomainError(
        "log_gamma: Gamma(z) is negative on parts of z < 0; use the complex "
        "overload for the principal branch (z = " + format_double(z) + ")");
  return dispatch_real(
      prec, [&] { return detail::log_gamma_real<Real50>(Real50(z)); },
      [&] { return detail::log_gamma_real<Real100>(Real100(z)); });
}

ComplexEvalResult log_gamma(std::complex<double> z, Precision prec) {
  check_not_pole(z, "log_gamma");
  if (prec == Precision::digits50)
    return round_to_eval_complex(
        detail::log_gamma_complex(Complex50(z.real(), z.imag())));
  return round_to_eval_complex(
      detail::log_gamma_complex(Complex100(z.real(), z.imag())));
}

EvalResult digamma(double z, Precision prec) {
  check_not_pole(z, "digamma");
  return dispatch_real(
      prec, [&] { return detail::digamma_real<Real50>(Real50(z)); },
      [&] { return detail::digamma_real<Real100>(Real100(z)); });
}

ComplexEvalResult digamma(std::complex<double> z, Precision prec) {
  check_not_pole(z, "digamma");
  if (prec == Precision::digits50)
    return round_to_eval_complex(
        detail::digamma_complex(Complex50(z.real(), z.imag())));
  return round_to_eval_complex(
      detail::digamma_complex(Complex100(z.real(), z.imag())));
}

EvalResult gamma_log(double z, Precision prec) {
  check_not_pole(z, "gamma_log");
  EvalResult r = dispatch_real(
      prec, [&] { return detail::gamma_log_real<Real50>(Real50(z)); },
      [&] { return detail::gamma_log_real<Real100>(Real100(z)); });
  if (!std::isfinite(r.value))
    throw DomainError("gamma_log: value at z = " + format_double(z) +
                      " exceeds the double range");
  return r;
}

EvalResult log_gamma2(double s, Precision prec) {
  if (!(s > 0))
    throw DomainError("log_gamma2: require s > 0, got s = " +
                      format_double(s));
  return dispatch_real(
      prec, [&] { return detail::log_gamma2_real<Real50>(Real50(s)); },
      [&] { return detail::log_gamma2_real<Real100>(Real100(s)); });
}

RationalList bernoulli_numbers(int M) {
  if (M < 0) throw DomainError("bernoulli_numbers: require M >= 0");
  return RationalList{bernoulli_exact(M)};
}

Rational bernoulli_poly(int m, const Rational& ell) {
  if (m < 0) throw DomainError("bernoulli_poly: require m >= 0");
  const auto B = bernoulli_exact(m);
  // B_m(ell) = sum_j C(m, j) B_j ell^(m-j).
  std::vector<Rational> pw(static_cast<std::size_t>(m) + 1);
  pw[0] = 1;
  for (int k = 1; k <= m; ++k)
    pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * ell;
  Rational acc = 0;
  Integer binom = 1;  // C(m, 0)
  for (int j = 0; j <= m; ++j) {
    acc += Rational(binom) * B[static_cast<std::size_t>(j)] *
           pw[static_cast<std::size_t>(m - j)];
    if (j < m) binom = binom * (m - j) / (j + 1);  // -> C(m, j+1)
  }
  return acc;
}

namespace {

template <class R>
R dhoker_phong_core(int ell, bool use_zeta_prime) {
  const auto& tb = tables<R>();
  R acc = 0;
  // Integer m with 0 <= m < ell - 1/2, i.e. m <= ell - 1 (empty for ell=0).
  for (int m = 0; 2 * m < 2 * ell - 1; ++m)
    acc += R(2 * ell - 2 * m - 1) * log(R(2 * ell - m));
  const R lp = R(2 * ell + 1) / 2;  // ell + 1/2
  acc += -lp * lp + lp * tb.log_two_pi;
  if (use_zeta_prime)
    acc += 2 * detail::zeta_prime_minus_one_r<R>();
  else
    acc += R(-2) / 12;  // 2 * zeta(-1) read literally
  return acc;
}

}  // namespace

EvalResult dhoker_phong_c(int ell, bool use_zeta_prime, Precision prec) {
  if (ell < 0) throw DomainError("dhoker_phong_c: require ell >= 0");
  return dispatch_real(
      prec, [&] { return dhoker_phong_core<Real50>(ell, use_zeta_prime); },
      [&] { return dhoker_phong_core<Real100>(ell, use_zeta_prime); });
}

EvalResult constant_E(Precision prec) {
  return dispatch_real(
      prec, [] { return detail::constant_e_r<Real50>(); },
      [] { return detail::constant_e_r<Real100>(); });
}

EvalResult zeta_prime_minus_one(Precision prec) {
  return dispatch_real(
      prec, [] { return detail::zeta_prime_minus_one_r<Real50>(); },
      [] { return detail::zeta_prime_minus_one_r<Real100>(); });
}

}  // namespace cuspdet::specfun
