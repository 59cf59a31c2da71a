// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Selberg zeta evaluation.  The double product converges absolutely for
// s > 1; per length bin the inner k-product is truncated once its geometric
// tail drops below 1e-16, and the per-bin contributions are combined with a
// fixed pairwise-summation tree so results do not depend on evaluation
// order.  phi_H and Z_cusp are evaluated through the 50-digit special
// function kernels and rounded once.

#include <cuspdet/zeta.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <cuspdet/errors.hpp>
#include <cuspdet/precision.hpp>
#include <cuspdet/specfun.hpp>

namespace cuspdet::zeta {

namespace {

constexpr double kInnerTail = 1e-16;   // per-geodesic truncation threshold
constexpr double kLengthBin = 1e-9;    // coincident-length binning width

double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v, 0, v.size());
}

// One length bin: weight * sum_k f(e^{-(s+k) l}); k_cut is the first
// excluded index.  `log_terms` selects log(1-x) (zeta) versus
// l x/(1-x) (its s-derivative).
double inner_sum(double s, double length, bool log_terms, int* k_cut) {
  const double q = std::exp(-length);
  const double denom = -std::expm1(-length);  // 1 - e^{-l}, exact for small l
  double x = std::exp(-s * length);
  double acc = 0.0;
  int k = 0;
  while (true) {
    //   sum_{j>=k} |log(1 - x_j)|       <= x_k / (1 - e^{-l})
    //   sum_{j>=k} l x_j / (1 - x_j)    <= l x_k / (1 - e^{-l})^2
    const double tail =
        log_terms ? x / denom : length * x / (denom * denom);
    if (!(tail >= kInnerTail)) break;
    acc += log_terms ? std::log1p(-x) : length * x / (1.0 - x);
    x *= q;
    ++k;
  }
  *k_cut = k;
  return acc;
}

ZetaEval evaluate(const fuchsian::LengthSpectrum& sp, double s,
                  bool log_terms) {
  if (!(s > 1.0))
    throw DomainError("Selberg zeta evaluation requires s > 1");

  ZetaEval out;
  if (sp.entries.empty()) {
    out.warnings.push_back(
        "EmptySpectrumWarning: spectrum has no entries; empty product = 1");
    return out;
  }

  // Bin consecutive coincident lengths; each entry is one class, so the
  // bin weight is simply the number of entries it holds.
  std::vector<double> terms;
  terms.reserve(sp.entries.size());
  const std::size_t m = sp.entries.size();
  std::size_t lo = 0;
  int shell_count = 0;
  while (lo < m) {
    const double length = sp.entries[lo].length;
    std::size_t hi = lo;
    while (hi < m && std::fabs(sp.entries[hi].length - length) <= kLengthBin)
      ++hi;
    int k_cut = 0;
    const double inner = inner_sum(s, length, log_terms, &k_cut);
    terms.push_back(static_cast<double>(hi - lo) * inner);
    out.k_cut = std::max(out.k_cut, k_cut);
    if (length >= sp.cutoff - 1.0) shell_count += static_cast<int>(hi - lo);
    lo = hi;
  }
  out.log_value = pairwise_sum(terms);

  // Heuristic (not certified) bound on the classes beyond the cutoff.
  if (shell_count == 0) shell_count = 1;
  const double decay = std::exp(-(s - 1.0) * sp.cutoff);
  out.tail_estimate =
      decay / (-std::expm1(-(s - 1.0))) * static_cast<double>(shell_count);
  return out;
}

bool is_nonpositive_integer(double z) {
  return z <= 0.0 && z == std::floor(z);
}

}  // namespace

ZetaEval log_selberg_zeta(const fuchsian::LengthSpectrum& sp, double s) {
  return evaluate(sp, s, /*log_terms=*/true);
}

ZetaEval zeta_log_derivative(const fuchsian::LengthSpectrum& sp, double s) {
  return evaluate(sp, s, /*log_terms=*/false);
}

EvalResult zeta_prime_at_1(const fuchsian::LengthSpectrum& sp,
                           const std::vector<double>& eps_grid) {
  const std::size_t n = eps_grid.size();
  if (n < 3) throw DomainError("eps grid needs at least 3 points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(eps_grid[i] > 0.0 && eps_grid[i] <= 0.5))
      throw DomainError("eps grid points must lie in (0, 1/2]");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1]))
      throw DomainError("eps grid must be strictly decreasing");
  }
  if (sp.entries.empty())
    throw DivergedError(
        "Z is identically 1 on an empty spectrum; there is no zero at s = 1 "
        "to extrapolate");

  // Z(1+eps)/eps = Z'(1) + Z''(1)/2 eps + ... is polynomial in eps under
  // the simple-zero assumption; extrapolate it to eps = 0 with a Neville
  // table.  The last diagonal increment is reported as the error bar.
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i)
    t[i] = std::exp(log_selberg_zeta(sp, 1.0 + eps_grid[i]).log_value) /
           eps_grid[i];

  std::vector<double> diag;
  diag.push_back(t[0]);
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i)
      t[i] = (eps_grid[i] * t[i + 1] - eps_grid[i + m] * t[i]) /
             (eps_grid[i] - eps_grid[i + m]);
    diag.push_back(t[0]);
  }

  const double last_spread = std::fabs(diag[n - 1] - diag[n - 2]);
  if (!std::isfinite(diag[n - 1]) || !std::isfinite(last_spread))
    throw DivergedError("extrapolation of Z(1+eps)/eps overflowed");
  return {diag[n - 1], last_spread};
}

EvalResult phi_horn(double s) {
  if (s == 0.5) throw PoleError("phi_H has a pole at s = 1/2");
  if (is_nonpositive_integer(s + 0.5))
    throw PoleError("digamma pole at s + 1/2 = " + std::to_string(s + 0.5));
  if (!std::isfinite(s)) throw DomainError("phi_horn requires finite s");

  const Real50 ss(s);
  const Real50 r = -log(Real50(2)) -
                   specfun::detail::digamma_real<Real50>(ss + Real50(1) / 2) +
                   1 / (2 * ss - 1);
  const double value = r.convert_to<double>();
  return {value, (std::fabs(value) + 1.0) * 1e-15};
}

namespace {

Real50 z_cusp_log_r(double s) {
  if (!(s > 0.5))
    throw DomainError("Z_cusp requires s > 1/2");
  const Real50 ss(s);
  return log(2 * ss - 1) / 2 - ss * log(Real50(2)) -
         specfun::detail::log_gamma_real<Real50>(ss + Real50(1) / 2);
}

}  // namespace

EvalResult z_cusp(double s) {
  const Real50 lg = z_cusp_log_r(s);
  const double value = exp(lg).convert_to<double>();
  return {value, std::fabs(value) * 4e-16};
}

EvalResult z_cusp_log(double s) {
  const double value = z_cusp_log_r(s).convert_to<double>();
  return {value, (std::fabs(value) + 1.0) * 1e-15};
}

}  // namespace cuspdet::zeta
