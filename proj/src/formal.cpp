// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#include <cuspdet/formal.hpp>

#include <cuspdet/errors.hpp>
#include <cuspdet/specfun.hpp>

#include <algorithm>
#include <sstream>

namespace cuspdet::formal {

// ---------------------------------------------------------------------------
// Generators and monomials
// ---------------------------------------------------------------------------

std::string gen_name(GenId g) {
  switch (gen_kind(g)) {
    case GenKind::psi:
      return "psi_" + std::to_string(gen_index(g));
    case GenKind::kappa:
      return "kappa_" + std::to_string(gen_index(g));
    case GenKind::kappa_tilde:
      return "kappa~_" + std::to_string(gen_index(g));
    case GenKind::x:
      return "x";
  }
  return "gen?";
}

bool GeneratorAlphabet::contains(GenId g) const {
  const int idx = gen_index(g);
  switch (gen_kind(g)) {
    case GenKind::psi:
      return !univariate && idx >= 1 && idx <= n + 1;
    case GenKind::kappa:
    case GenKind::kappa_tilde:
      return !univariate && idx >= 0 && idx <= max_kappa;
    case GenKind::x:
      return univariate;
  }
  return false;
}

int GeneratorAlphabet::degree(GenId g) const {
  switch (gen_kind(g)) {
    case GenKind::psi:
    case GenKind::x:
      return 1;
    case GenKind::kappa:
    case GenKind::kappa_tilde:
      return gen_index(g);
  }
  return 0;
}

int Monomial::degree(const GeneratorAlphabet& alpha) const {
  int d = 0;
  for (const auto& [g, e] : factors)
    d += alpha.degree(g) * static_cast<int>(e);
  return d;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : factors) {
    if (!out.empty()) out += "*";
    out += gen_name(g);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedSeries
// ---------------------------------------------------------------------------

GradedSeries::GradedSeries(GeneratorAlphabet alpha, int truncation_degree)
    : alpha_(alpha), degree_(truncation_degree) {
  if (truncation_degree < 0)
    throw DomainError("GradedSeries: truncation degree must be >= 0");
}

GradedSeries GradedSeries::constant(const GeneratorAlphabet& alpha, int D,
                                    const Rational& c) {
  GradedSeries s(alpha, D);
  s.add_term(Monomial{}, c);
  return s;
}

GradedSeries GradedSeries::generator(const GeneratorAlphabet& alpha, int D,
                                     GenId g, std::uint32_t power) {
  GradedSeries s(alpha, D);
  if (power == 0) {
    s.add_term(Monomial{}, 1);
    return s;
  }
  Monomial m;
  m.factors.emplace_back(g, power);
  s.add_term(m, 1);
  return s;
}

Rational GradedSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  for (const auto& [g, e] : m.factors) {
    if (e == 0 || !alpha_.contains(g))
      throw DomainError("GradedSeries: generator " + gen_name(g) +
                        " is not admitted by this alphabet");
  }
  if (m.degree(alpha_) > degree_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedSeries::check_same_shape(const GradedSeries& rhs) const {
  if (!(alpha_ == rhs.alpha_) || degree_ != rhs.degree_)
    throw AlphabetMismatch(
        "series operands disagree in alphabet or truncation degree");
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& rhs) {
  check_same_shape(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& rhs) {
  check_same_shape(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GradedSeries operator+(GradedSeries a, const GradedSeries& b) {
  a += b;
  return a;
}

GradedSeries operator-(GradedSeries a, const GradedSeries& b) {
  a -= b;
  return a;
}

GradedSeries operator*(GradedSeries a, const Rational& c) {
  a *= c;
  return a;
}

namespace {

// Sorted merge of factor lists, adding exponents of equal generators.
Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first < b.factors[j].first) {
      out.factors.push_back(a.factors[i++]);
    } else if (b.factors[j].first < a.factors[i].first) {
      out.factors.push_back(b.factors[j++]);
    } else {
      out.factors.emplace_back(a.factors[i].first,
                               a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.factors.size(); ++i) out.factors.push_back(a.factors[i]);
  for (; j < b.factors.size(); ++j) out.factors.push_back(b.factors[j]);
  return out;
}

}  // namespace

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_same_shape(b);
  GradedSeries out(a.alphabet(), a.truncation_degree());
  const int D = a.truncation_degree();
  for (const auto& [ma, ca] : a.terms()) {
    const int da = ma.degree(a.alphabet());
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree(b.alphabet()) > D) continue;
      out.add_term(merge_monomials(ma, mb), ca * cb);
    }
  }
  return out;
}

bool GradedSeries::operator==(const GradedSeries& rhs) const {
  return alpha_ == rhs.alpha_ && degree_ == rhs.degree_ &&
         terms_ == rhs.terms_;
}

std::string GradedSeries::str() const {
  if (terms_.empty()) return "0";
  // Render sorted by (degree, monomial) for stable output.
  std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> rows;
  rows.reserve(terms_.size());
  for (const auto& t : terms_) rows.emplace_back(t.first.degree(alpha_), &t);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, t] : rows) {
    (void)deg;
    if (!first) os << " + ";
    first = false;
    os << "(" << t->second.str() << ")";
    if (!t->first.factors.empty()) os << "*" << t->first.str();
  }
  return os.str();
}

GradedSeries series_arith(const GradedSeries& a, const GradedSeries& b,
                          SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return a + b;
    case SeriesOp::mul:
      return a * b;
  }
  throw DomainError("series_arith: unknown operation");
}

// ---------------------------------------------------------------------------
// Univariate kernels (dense exact arithmetic, then packed into a series)
// ---------------------------------------------------------------------------

namespace {

using Dense = std::vector<Rational>;  // coefficients of x^0..x^D

// q = a / b truncated, requires b[0] != 0.
Dense dense_div(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = k < a.size() ? a[k] : Rational(0);
    for (std::size_t j = 0; j < k; ++j) {
      if (k - j < b.size()) acc -= q[j] * b[k - j];
    }
    q[k] = acc / b[0];
  }
  return q;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// x / (e^x - 1): inverse of sum_k x^k/(k+1)!.
Dense dense_todd(int D) {
  Dense den(static_cast<std::size_t>(D) + 1);
  Rational fact = 1;  // (k+1)!
  for (int k = 0; k <= D; ++k) {
    fact *= k + 1;
    den[static_cast<std::size_t>(k)] = Rational(1) / fact;
  }
  Dense one(static_cast<std::size_t>(D) + 1);
  one[0] = 1;
  return dense_div(one, den);
}

// e^(ell x) componentwise.
Dense dense_exp_ell(int ell, int D) {
  Dense out(static_cast<std::size_t>(D) + 1);
  Rational term = 1;  // ell^k / k!
  out[0] = 1;
  for (int k = 1; k <= D; ++k) {
    term = term * ell / k;
    out[static_cast<std::size_t>(k)] = term;
  }
  return out;
}

// x/(2 tanh(x/2)) = cosh(x/2) / (sinh(x/2)/(x/2) / ... ) computed as the
// quotient of the two even series cosh(x/2) and sinh(x/2)/(x/2); this is
// deliberately independent of dense_todd so that the half-coth identity
// check compares two genuinely different computations.
Dense dense_half_coth(int D) {
  Dense num(static_cast<std::size_t>(D) + 1);
  Dense den(static_cast<std::size_t>(D) + 1);
  Rational pow_quarter = 1;  // (1/4)^k, since (1/2)^(2k) = 4^(-k)
  Rational fact2k = 1;       // (2k)!
  Rational fact2k1 = 1;      // (2k+1)!
  for (int k = 0; 2 * k <= D; ++k) {
    if (k > 0) {
      pow_quarter /= 4;
      fact2k *= Rational(2 * k - 1) * (2 * k);
      fact2k1 *= Rational(2 * k) * (2 * k + 1);
    }
    num[static_cast<std::size_t>(2 * k)] = pow_quarter / fact2k;
    den[static_cast<std::size_t>(2 * k)] = pow_quarter / fact2k1;
  }
  return dense_div(num, den);
}

GradedSeries pack_univariate(const Dense& c, int D) {
  GeneratorAlphabet alpha;
  alpha.univariate = true;
  GradedSeries s(alpha, D);
  const GenId x = make_gen(GenKind::x, 0);
  for (int k = 0; k <= D; ++k) {
    if (k == 0) {
      s.add_term(Monomial{}, c[0]);
    } else {
      Monomial m;
      m.factors.emplace_back(x, static_cast<std::uint32_t>(k));
      s.add_term(m, c[static_cast<std::size_t>(k)]);
    }
  }
  return s;
}

}  // namespace

GradedSeries univariate_kernel(KernelKind kind, int ell, int D) {
  if (D < 0) throw DomainError("univariate_kernel: require D >= 0");
  switch (kind) {
    case KernelKind::todd_twisted:
      return pack_univariate(dense_mul(dense_exp_ell(ell, D), dense_todd(D)),
                             D);
    case KernelKind::half_coth:
      return pack_univariate(dense_half_coth(D), D);
    case KernelKind::eta_form: {
      // (half_coth(x) - 1)/x: compute one degree higher, strip the pole.
      const Dense h = dense_half_coth(D + 1);
      Dense eta(static_cast<std::size_t>(D) + 1);
      for (int k = 0; k <= D; ++k)
        eta[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k) + 1];
      return pack_univariate(eta, D);
    }
  }
  throw DomainError("univariate_kernel: unknown kind");
}

GradedSeries substitute_x(const GradedSeries& uni,
                          const GeneratorAlphabet& alpha, int D, GenId g) {
  if (!uni.alphabet().univariate)
    throw DomainError("substitute_x: input must be a univariate series");
  if (!alpha.contains(g) || alpha.degree(g) != 1)
    throw DomainError("substitute_x: target must be a degree-1 generator");
  GradedSeries out(alpha, D);
  for (const auto& [m, c] : uni.terms()) {
    if (m.factors.empty()) {
      out.add_term(Monomial{}, c);
    } else {
      Monomial t;
      t.factors.emplace_back(g, m.factors.front().second);
      out.add_term(t, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tautological operations
// ---------------------------------------------------------------------------

GradedSeries fiber_integrate(const GradedSeries& s) {
  const GeneratorAlphabet& alpha = s.alphabet();
  if (alpha.univariate)
    throw MixedGenerators(
        "fiber_integrate: input must live in a psi/kappa alphabet");
  const GenId fiber_psi = make_gen(GenKind::psi, alpha.n + 1);
  GradedSeries out(alpha, s.truncation_degree());
  for (const auto& [m, c] : s.terms()) {
    if (m.factors.empty()) continue;  // constants integrate to zero
    if (m.factors.size() != 1 || m.factors.front().first != fiber_psi)
      throw MixedGenerators(
          "fiber_integrate: input must be a series in psi_" +
          std::to_string(alpha.n + 1) + " alone (found " + m.str() + ")");
    const std::uint32_t e = m.factors.front().second;
    Monomial k;
    k.factors.emplace_back(make_gen(GenKind::kappa, static_cast<int>(e) - 1),
                           1u);
    // kappa_0 is a genuine degree-0 generator, so psi^1 -> kappa_0 stays.
    out.add_term(k, c);
  }
  return out;
}

namespace {

GradedSeries pow_series(const GradedSeries& s, std::uint32_t e) {
  GradedSeries out = GradedSeries::constant(s.alphabet(),
                                            s.truncation_degree(), 1);
  for (std::uint32_t i = 0; i < e; ++i) out = out * s;
  return out;
}

}  // namespace

GradedSeries ac_substitute(const GradedSeries& s, int n) {
  const GeneratorAlphabet& alpha = s.alphabet();
  if (alpha.univariate)
    throw DomainError("ac_substitute: input must live in a psi/kappa alphabet");
  if (n != alpha.n)
    throw DomainError("ac_substitute: n = " + std::to_string(n) +
                      " disagrees with the alphabet's cusp count " +
                      std::to_string(alpha.n));
  const int D = s.truncation_degree();
  GradedSeries out(alpha, D);
  for (const auto& [m, c] : s.terms()) {
    GradedSeries prod = GradedSeries::constant(alpha, D, c);
    for (const auto& [g, e] : m.factors) {
      if (gen_kind(g) == GenKind::kappa) {
        const int idx = gen_index(g);
        // kappa_m -> kappa~_m + sum_i psi_i^m (psi_i^0 = 1 at m = 0).
        GradedSeries sub = GradedSeries::generator(
            alpha, D, make_gen(GenKind::kappa_tilde, idx));
        if (idx == 0) {
          sub += GradedSeries::constant(alpha, D, n);
        } else {
          for (int i = 1; i <= n; ++i)
            sub += GradedSeries::generator(alpha, D,
                                           make_gen(GenKind::psi, i),
                                           static_cast<std::uint32_t>(idx));
        }
        prod = prod * pow_series(sub, e);
      } else {
        prod = prod * GradedSeries::generator(alpha, D, g, e);
      }
    }
    out += prod;
  }
  return out;
}

GradedSeries index_density(int ell, int g, int n, int D) {
  if (n < 0 || g < 0 || 2 * g + n < 3)
    throw DomainError("index_density: require g, n >= 0 and 2g + n >= 3");
  if (D < 0) throw DomainError("index_density: require D >= 0");

  GeneratorAlphabet alpha;
  alpha.n = n;
  alpha.max_kappa = D;
  GradedSeries acc(alpha, D);

  // sum_{m>=1} B_m(ell)/m! kappa_{m-1}; kappa_{m-1} has degree m-1 <= D.
  Rational mfact = 1;
  for (int m = 1; m <= D + 1; ++m) {
    mfact *= m;
    const Rational bm = specfun::bernoulli_poly(m, Rational(ell));
    Monomial km;
    km.factors.emplace_back(make_gen(GenKind::kappa, m - 1), 1u);
    acc.add_term(km, bm / mfact);
  }

  // (n/2) sign(1/2 - ell); ell is an integer so the sign never vanishes.
  const int sign = ell <= 0 ? 1 : -1;
  acc.add_term(Monomial{}, Rational(n * sign, 2));

  // - sum_i eta(psi_i).
  const GradedSeries eta = univariate_kernel(KernelKind::eta_form, 0, D);
  for (int i = 1; i <= n; ++i)
    acc -= substitute_x(eta, alpha, D, make_gen(GenKind::psi, i));

  return acc;
}

Rational evaluate_degree_zero(const GradedSeries& s,
                              const Rational& kappa0_value) {
  const GenId k0 = make_gen(GenKind::kappa, 0);
  Rational acc = 0;
  for (const auto& [m, c] : s.terms()) {
    if (m.factors.empty()) {
      acc += c;
      continue;
    }
    // Only pure kappa_0 powers survive setting positive-degree gens to 0.
    if (m.factors.size() == 1 && m.factors.front().first == k0) {
      Rational p = 1;
      for (std::uint32_t i = 0; i < m.factors.front().second; ++i)
        p *= kappa0_value;
      acc += c * p;
    }
  }
  return acc;
}

KernelFiberReport todd_fiber_compare(int ell, int D) {
  if (D < 0) throw DomainError("todd_fiber_compare: require D >= 0");

  // Work in the n = 0 alphabet, whose fiber variable is psi_1.  The kernel
  // is expanded one degree beyond D because fiber integration lowers the
  // degree by one (psi^(m+1) -> kappa_m).
  GeneratorAlphabet alpha;
  alpha.n = 0;
  alpha.max_kappa = D + 1;
  const GenId fiber_psi = make_gen(GenKind::psi, 1);

  const GradedSeries kernel =
      univariate_kernel(KernelKind::todd_twisted, ell, D + 1);
  const GradedSeries lhs =
      fiber_integrate(substitute_x(kernel, alpha, D + 1, fiber_psi));

  GradedSeries rhs(alpha, D + 1);
  Rational mfact = 1;
  for (int m = 1; m <= D + 1; ++m) {
    mfact *= m;
    Monomial km;
    km.factors.emplace_back(make_gen(GenKind::kappa, m - 1), 1u);
    rhs.add_term(km, specfun::bernoulli_poly(m, Rational(ell)) / mfact);
  }

  KernelFiberReport rep;
  rep.ell = ell;
  rep.degree_checked = D;
  rep.equal = (lhs == rhs);
  if (!rep.equal) rep.detail = (lhs - rhs).str();
  return rep;
}

BiniReport bini_compare(int ell, int n, int D) {
  if (ell != 0 && ell != 1)
    throw DomainError("bini_compare: require ell in {0, 1}");
  if (n < 0 || D < 0) throw DomainError("bini_compare: require n, D >= 0");

  // The density does not depend on g; any genus with 2g + n >= 3 works.
  const GradedSeries density = index_density(ell, /*g=*/2, n, D);
  const GradedSeries lhs = ac_substitute(density, n);

  GradedSeries rhs(lhs.alphabet(), D);
  Rational mfact = 1;
  for (int m = 1; m <= D + 1; ++m) {
    mfact *= m;
    Monomial km;
    km.factors.emplace_back(make_gen(GenKind::kappa_tilde, m - 1), 1u);
    rhs.add_term(km, specfun::bernoulli_poly(m, Rational(ell)) / mfact);
  }

  BiniReport rep;
  rep.ell = ell;
  rep.n = n;
  rep.degree_checked = D;
  rep.equal = (lhs == rhs);
  if (!rep.equal) rep.detail = (lhs - rhs).str();
  return rep;
}

}  // namespace cuspdet::formal
