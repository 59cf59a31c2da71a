// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Exact-rational truncated graded series over the tautological generators
// psi_1..psi_{n+1}, kappa_m, kappa-tilde_m (and a plain univariate x for
// kernel expansions).  Everything here is exact: coefficients are
// rationals, arithmetic truncates at a fixed total degree, and the
// characteristic-class identities are verified as identities of stored
// coefficient maps — no floating point anywhere.
//
// Degree bookkeeping: each formal variable of cohomological degree 2 is
// given formal degree 1 (psi_i, x), kappa_m and kappa-tilde_m have formal
// degree m (so kappa_0 is a degree-0 generator, kept symbolic and only
// evaluated in the degree-0 numeric cross-checks).

#ifndef CUSPDET_FORMAL_HPP
#define CUSPDET_FORMAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <cuspdet/precision.hpp>

namespace cuspdet::formal {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

enum class GenKind : std::uint32_t {
  psi = 1,          // psi_i, i = 1..n+1, degree 1
  kappa = 2,        // kappa_m, m = 0..max_kappa, degree m
  kappa_tilde = 3,  // kappa-tilde_m, degree m
  x = 4,            // the univariate kernel variable, degree 1
};

// Packed generator identifier; ordering (psi < kappa < kappa~ < x, then by
// index) fixes the canonical monomial ordering.
using GenId = std::uint32_t;

constexpr GenId make_gen(GenKind kind, int index) {
  return (static_cast<std::uint32_t>(kind) << 24) |
         static_cast<std::uint32_t>(index);
}
constexpr GenKind gen_kind(GenId g) { return static_cast<GenKind>(g >> 24); }
constexpr int gen_index(GenId g) { return static_cast<int>(g & 0xffffffu); }

std::string gen_name(GenId g);  // "psi_3", "kappa_2", "kappa~_2", "x"

struct GeneratorAlphabet {
  int n = 0;               // cusp count; admits psi_1..psi_{n+1}
  int max_kappa = 0;       // admits kappa_0..kappa_{max_kappa} (and tildes)
  bool univariate = false; // admits only x

  bool operator==(const GeneratorAlphabet&) const = default;
  bool contains(GenId g) const;
  int degree(GenId g) const;  // formal degree of one power of g
};

// ---------------------------------------------------------------------------
// Monomials and series
// ---------------------------------------------------------------------------

struct Monomial {
  // Factors sorted by GenId, exponents >= 1; empty means the constant 1.
  std::vector<std::pair<GenId, std::uint32_t>> factors;

  auto operator<=>(const Monomial&) const = default;
  int degree(const GeneratorAlphabet& alpha) const;
  std::string str() const;
};

class GradedSeries {
 public:
  GradedSeries(GeneratorAlphabet alpha, int truncation_degree);

  static GradedSeries constant(const GeneratorAlphabet& alpha, int D,
                               const Rational& c);
  // The monomial g^power as a series.
  static GradedSeries generator(const GeneratorAlphabet& alpha, int D,
                                GenId g, std::uint32_t power = 1);

  const GeneratorAlphabet& alphabet() const { return alpha_; }
  int truncation_degree() const { return degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;  // 0 when absent
  bool is_zero() const { return terms_.empty(); }

  GradedSeries& operator+=(const GradedSeries& rhs);
  GradedSeries& operator-=(const GradedSeries& rhs);
  GradedSeries& operator*=(const Rational& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b);
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(GradedSeries a, const Rational& c);
  bool operator==(const GradedSeries& rhs) const;

  // Adds c * m, dropping exact zeros and terms beyond the truncation.
  void add_term(const Monomial& m, const Rational& c);

  std::string str() const;  // deterministic human-readable rendering

 private:
  void check_same_shape(const GradedSeries& rhs) const;

  GeneratorAlphabet alpha_;
  int degree_;
  std::map<Monomial, Rational> terms_;
};

enum class SeriesOp { add, mul };

// Checked binary arithmetic (AlphabetMismatch on shape disagreement).
GradedSeries series_arith(const GradedSeries& a, const GradedSeries& b,
                          SeriesOp op);

// ---------------------------------------------------------------------------
// Univariate kernels
// ---------------------------------------------------------------------------

enum class KernelKind {
  todd_twisted,  // e^(ell x) x / (e^x - 1)
  eta_form,      // 1/(2 tanh(x/2)) - 1/x, pole removed: odd, starts at x/12
  half_coth,     // x / (2 tanh(x/2))
};

// Exact Taylor coefficients up to degree D, as a series in the single
// generator x.  `ell` is consumed only by todd_twisted.
GradedSeries univariate_kernel(KernelKind kind, int ell, int D);

// Substitute x -> g^1 into a univariate series, re-truncating in the
// target alphabet (g must have degree 1 there).
GradedSeries substitute_x(const GradedSeries& uni,
                          const GeneratorAlphabet& alpha, int D, GenId g);

// ---------------------------------------------------------------------------
// Tautological operations
// ---------------------------------------------------------------------------

// Fiber integration (pi_{n+1})_*: psi_{n+1}^(m+1) -> kappa_m for m >= 0,
// constants -> 0.  MixedGenerators if the input involves anything other
// than powers of psi_{n+1}.
GradedSeries fiber_integrate(const GradedSeries& s);

// Arbarello-Cornalba comparison: kappa_m -> kappa~_m + sum_i psi_i^m
// (m = 0 gives kappa~_0 + n), re-truncated at the input degree.
GradedSeries ac_substitute(const GradedSeries& s, int n);

// The cohomological index density
//
//   sum_{m>=1} B_m(ell)/m! kappa_{m-1} + (n/2) sign(1/2 - ell)
//     - sum_{i=1..n} [ 1/(2 tanh(psi_i/2)) - 1/psi_i ],
//
// with the exact transgression term dropped (it is d of something and
// vanishes in cohomology).  The series itself does not depend on g; the
// genus only enters the validity constraint 2g + n >= 3 and the degree-0
// evaluation kappa_0 -> 2g - 2 + n used by the numeric cross-checks.
GradedSeries index_density(int ell, int g, int n, int D);

// Degree-0 numeric evaluation: kappa_0 -> kappa0_value, every
// positive-degree generator -> 0; returns the resulting constant.
Rational evaluate_degree_zero(const GradedSeries& s,
                              const Rational& kappa0_value);

// Interior/boundary comparison at the Bini normalizations ell in {0, 1}:
// checks that ac_substitute(index_density) collapses to
// sum_{m>=1} B_m(ell)/m! kappa~_{m-1}, i.e. that the per-cusp psi-series
// cancel exactly against the eta terms.
struct BiniReport {
  int ell = 0;
  int n = 0;
  int degree_checked = 0;
  bool equal = false;
  std::string detail;  // difference rendering when not equal
};

BiniReport bini_compare(int ell, int n, int D);

// Twisted-Todd fiber identity: integrating the kernel e^(ell x) x/(e^x - 1)
// along the fiber variable psi_{n+1} must reproduce the Bernoulli-polynomial
// series sum_{m>=1} B_m(ell)/m! kappa_{m-1}, exactly, up to kappa degree D.
struct KernelFiberReport {
  int ell = 0;
  int degree_checked = 0;
  bool equal = false;
  std::string detail;  // difference rendering when not equal
};

KernelFiberReport todd_fiber_compare(int ell, int D);

}  // namespace cuspdet::formal

#endif  // CUSPDET_FORMAL_HPP
