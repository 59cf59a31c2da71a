// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Length-spectrum enumeration.  Conjugacy classes of the free group are
// walked as reduced words in depth-first order; a class is recorded exactly
// once, at its canonical word (cyclically reduced, primitive, minimal
// rotation).  Matrix products are exact throughout: an int64 fast path with
// __int128 intermediates covers the built-in integral generators, and a
// rational path covers conjugated or otherwise non-integral presentations.
// Workers split the search by first letter and never share mutable state;
// the merged result is sorted by exact trace and word, so it is identical
// for every worker count.

#include <cuspdet/fuchsian.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <cuspdet/errors.hpp>

namespace cuspdet::fuchsian {

namespace {

// ---------------------------------------------------------------------------
// Letters
// ---------------------------------------------------------------------------
// Letter codes double as alphabet ranks: generator i -> 2i (lowercase),
// its inverse -> 2i + 1 (uppercase), and code ^ 1 is the inverse letter.

int code_of(char ch) {
  if (ch >= 'a' && ch <= 'z') return 2 * (ch - 'a');
  if (ch >= 'A' && ch <= 'Z') return 2 * (ch - 'A') + 1;
  return -1;
}

char char_of(int code) {
  return static_cast<char>((code & 1) ? 'A' + code / 2 : 'a' + code / 2);
}

std::vector<int> codes_of(const std::string& word, int num_gens) {
  std::vector<int> codes;
  codes.reserve(word.size());
  for (char ch : word) {
    const int code = code_of(ch);
    if (code < 0 || (num_gens > 0 && code / 2 >= num_gens))
      throw DomainError("letter '" + std::string(1, ch) +
                        "' is outside the generator alphabet");
    codes.push_back(code);
  }
  return codes;
}

std::string string_of(const std::vector<int>& codes) {
  std::string word;
  word.reserve(codes.size());
  for (int code : codes) word.push_back(char_of(code));
  return word;
}

std::vector<int> free_reduce(const std::vector<int>& codes) {
  std::vector<int> out;
  out.reserve(codes.size());
  for (int code : codes) {
    if (!out.empty() && out.back() == (code ^ 1))
      out.pop_back();
    else
      out.push_back(code);
  }
  return out;
}

std::vector<int> cyclic_reduce(const std::vector<int>& codes) {
  std::vector<int> w = free_reduce(codes);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == (w[hi - 1] ^ 1)) {
    ++lo;
    --hi;
  }
  return std::vector<int>(w.begin() + lo, w.begin() + hi);
}

// True iff the word is strictly smaller than each of its nontrivial
// rotations.  Equality with a nontrivial rotation means the word is a
// proper power, so this single scan enforces canonicality and primitivity
// together.
bool strictly_minimal_rotation(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    int cmp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int x = w[(i + r) % n];
      const int y = w[i];
      if (x != y) {
        cmp = x < y ? -1 : 1;
        break;
      }
    }
    if (cmp <= 0) return false;
  }
  return true;
}

bool word_rank_less(const std::string& x, const std::string& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int rx = code_of(x[i]);
    const int ry = code_of(y[i]);
    if (rx != ry) return rx < ry;
  }
  return x.size() < y.size();
}

// ---------------------------------------------------------------------------
// Exact matrix paths
// ---------------------------------------------------------------------------

struct IntMat {
  std::int64_t a, b, c, d;
};

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

[[noreturn]] void throw_overflow(const std::string& word) {
  throw OverflowError("matrix entries exceeded the exact 64-bit range at word '" +
                      word + "'; reduce max_word_len");
}

struct IntOps {
  using Mat = IntMat;
  using Trace = std::int64_t;

  std::vector<IntMat> gens;  // 2k letters: generator, inverse, generator, ...

  const Mat& gen_mat(int code) const { return gens[code]; }

  Mat mul(const Mat& m, int code, const std::vector<int>& word) const {
    const IntMat& g = gens[code];
    const __int128 e[4] = {
        static_cast<__int128>(m.a) * g.a + static_cast<__int128>(m.b) * g.c,
        static_cast<__int128>(m.a) * g.b + static_cast<__int128>(m.b) * g.d,
        static_cast<__int128>(m.c) * g.a + static_cast<__int128>(m.d) * g.c,
        static_cast<__int128>(m.c) * g.b + static_cast<__int128>(m.d) * g.d};
    for (const __int128 v : e)
      if (v > kInt64Max || v < -static_cast<__int128>(kInt64Max))
        throw_overflow(string_of(word));
    return {static_cast<std::int64_t>(e[0]), static_cast<std::int64_t>(e[1]),
            static_cast<std::int64_t>(e[2]), static_cast<std::int64_t>(e[3])};
  }

  Trace trace(const Mat& m, const std::vector<int>& word) const {
    const __int128 t = static_cast<__int128>(m.a) + m.d;
    if (t > kInt64Max || t < -static_cast<__int128>(kInt64Max))
      throw_overflow(string_of(word));
    return static_cast<std::int64_t>(t);
  }
};

struct RatOps {
  using Mat = MoebiusMatrix;
  using Trace = Rational;

  std::vector<MoebiusMatrix> gens;

  const Mat& gen_mat(int code) const { return gens[code]; }
  Mat mul(const Mat& m, int code, const std::vector<int>&) const {
    return m * gens[code];
  }
  Trace trace(const Mat& m, const std::vector<int>&) const { return m.trace(); }
};

template <class Trace>
struct ClassRec {
  Trace abs_trace;
  double signed_trace;
  std::string word;
  int word_len;
};

std::int64_t abs_of(std::int64_t t) { return t < 0 ? -t : t; }
Rational abs_of(const Rational& t) { return t < 0 ? Rational(-t) : t; }

// Single rounding via extended precision, shared with geodesic_length and
// the witness computation so every reported length agrees bitwise with
// 2 arccosh(|tr|/2) of the representative word.
double length_real50(const Real50& tr) {
  const Real50 len = 2 * log((tr + sqrt(tr * tr - 4)) / 2);
  return len.convert_to<double>();
}
double length_from_abs_trace(std::int64_t t) {
  return length_real50(Real50(t));
}
double length_from_abs_trace(const Rational& t) {
  return length_real50(t.convert_to<Real50>());
}

double to_double(std::int64_t t) { return static_cast<double>(t); }
double to_double(const Rational& t) { return t.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Depth-first walk over reduced words
// ---------------------------------------------------------------------------

template <class Ops>
struct Walker {
  const Ops& ops;
  int max_len;
  int num_letters;
  std::vector<int> word;
  std::vector<ClassRec<typename Ops::Trace>>* out;

  void run(int first) {
    word.clear();
    word.reserve(static_cast<std::size_t>(max_len));
    word.push_back(first);
    step(ops.gen_mat(first), first);
  }

  void step(const typename Ops::Mat& m, int min_code) {
    // A reduced word is cyclically reduced iff its first letter is not the
    // inverse of its last; it is canonical iff in addition it is strictly
    // minimal among its rotations (which also rules out proper powers).
    if (word.front() != (word.back() ^ 1) && word.front() == min_code &&
        strictly_minimal_rotation(word)) {
      record(m);
    }
    if (static_cast<int>(word.size()) < max_len) {
      const int banned = word.back() ^ 1;
      for (int code = 0; code < num_letters; ++code) {
        if (code == banned) continue;
        word.push_back(code);
        step(ops.mul(m, code, word), std::min(min_code, code));
        word.pop_back();
      }
    }
  }

  void record(const typename Ops::Mat& m) {
    const auto t = ops.trace(m, word);
    const auto at = abs_of(t);
    if (at < 2)
      throw EllipticFound("elliptic element at word '" + string_of(word) +
                          "'; the group has torsion");
    if (at == 2) return;  // parabolic: cusp class, not a geodesic
    out->push_back({at, to_double(t), string_of(word),
                    static_cast<int>(word.size())});
  }
};

template <class Ops>
std::vector<ClassRec<typename Ops::Trace>> run_walkers(const Ops& ops,
                                                       int max_word_len,
                                                       int workers) {
  using Rec = ClassRec<typename Ops::Trace>;
  const int num_letters = static_cast<int>(ops.gens.size());
  if (max_word_len == 0 || num_letters == 0) return {};

  std::vector<std::vector<Rec>> per_letter(num_letters);
  std::vector<std::exception_ptr> errors(num_letters);

  auto task = [&](int code) {
    try {
      Walker<Ops> walker{ops, max_word_len, num_letters, {}, &per_letter[code]};
      walker.run(code);
    } catch (...) {
      errors[code] = std::current_exception();
    }
  };

  if (workers <= 1) {
    for (int code = 0; code < num_letters; ++code) task(code);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (int code = t; code < num_letters; code += workers) task(code);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (int code = 0; code < num_letters; ++code)
    if (errors[code]) std::rethrow_exception(errors[code]);

  std::vector<Rec> all;
  std::size_t total = 0;
  for (const auto& part : per_letter) total += part.size();
  all.reserve(total);
  for (auto& part : per_letter)
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  return all;
}

// Geodesic length of the explicit witness word g_1^w g_2 (or g_1^(w+1) for
// rank-one presentations), one letter past the cutoff.  Computed with exact
// rationals and a 50-digit log, so it stays meaningful when the trace is
// astronomically large.  Returns +inf when the witness is not hyperbolic.
double witness_length(const FuchsianPresentation& grp, int max_word_len) {
  MoebiusMatrix m{1, 0, 0, 1};
  for (int i = 0; i < max_word_len; ++i) m = m * grp.generators[0];
  m = m * (grp.generators.size() >= 2 ? grp.generators[1] : grp.generators[0]);
  Rational t = m.trace();
  if (t < 0) t = -t;
  if (t <= 2) return std::numeric_limits<double>::infinity();
  return length_from_abs_trace(t);
}

// Cutoff bookkeeping shared by enumerate_spectrum and apply_cutoff:
// recomputes complete_below, incomplete_cutoff, and the cutoff warnings
// from the already-populated cutoff / l_stable / witness_next fields.
void set_cutoff_diagnostics(LengthSpectrum* spec) {
  spec->complete_below = std::min(spec->l_stable, spec->witness_next);
  spec->incomplete_cutoff = false;
  spec->warnings.clear();
  if (spec->cutoff >= spec->witness_next) {
    spec->incomplete_cutoff = true;
    spec->warnings.push_back(
        "IncompleteCutoff: a class of length " +
        std::to_string(spec->witness_next) + " exists at word length " +
        std::to_string(spec->max_word_len + 1) + ", so max_word_len " +
        std::to_string(spec->max_word_len) +
        " provably cannot cover cutoff " + std::to_string(spec->cutoff));
  } else if (spec->cutoff > spec->complete_below) {
    spec->warnings.push_back(
        "cutoff " + std::to_string(spec->cutoff) +
        " exceeds the stable range " + std::to_string(spec->complete_below) +
        "; entries between may still be missing at this max_word_len");
  }
}

template <class Trace>
LengthSpectrum finish(std::vector<ClassRec<Trace>>&& classes,
                      const FuchsianPresentation& grp, double cutoff,
                      int max_word_len, double witness_next) {
  std::sort(classes.begin(), classes.end(),
            [](const ClassRec<Trace>& x, const ClassRec<Trace>& y) {
              if (x.abs_trace != y.abs_trace) return x.abs_trace < y.abs_trace;
              return word_rank_less(x.word, y.word);
            });

  LengthSpectrum spec;
  spec.surface = grp.surface;
  spec.cutoff = cutoff;
  spec.max_word_len = max_word_len;
  spec.group = grp.name;
  spec.witness_next = witness_next;

  double l_stable = std::numeric_limits<double>::infinity();
  const std::size_t m = classes.size();
  std::size_t lo = 0;
  while (lo < m) {
    std::size_t hi = lo;
    while (hi < m && classes[hi].abs_trace == classes[lo].abs_trace) ++hi;
    const double length = length_from_abs_trace(classes[lo].abs_trace);
    const long long mult = static_cast<long long>(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
      if (classes[i].word_len >= max_word_len - 1)
        l_stable = std::min(l_stable, length);
      if (length <= cutoff)
        spec.entries.push_back(
            {length, classes[i].signed_trace, mult, std::move(classes[i].word)});
    }
    lo = hi;
  }

  spec.l_stable = l_stable;
  set_cutoff_diagnostics(&spec);
  return spec;
}

bool integral_generators(const std::vector<MoebiusMatrix>& gens,
                         std::vector<IntMat>* letters) {
  letters->clear();
  for (const MoebiusMatrix& g : gens) {
    for (const MoebiusMatrix& m : {g, g.inverse()}) {
      const Rational entries[4] = {m.a, m.b, m.c, m.d};
      std::int64_t slots[4] = {};
      for (int i = 0; i < 4; ++i) {
        if (denominator(entries[i]) != 1) return false;
        const Integer num = numerator(entries[i]);
        if (num > kInt64Max / 4 || num < -Integer(kInt64Max / 4)) return false;
        slots[i] = num.convert_to<std::int64_t>();
      }
      letters->push_back({slots[0], slots[1], slots[2], slots[3]});
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrices and presentations
// ---------------------------------------------------------------------------

MoebiusMatrix MoebiusMatrix::operator*(const MoebiusMatrix& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

MoebiusMatrix MoebiusMatrix::inverse() const {
  if (det() != 1)
    throw DomainError("matrix inverse requires unit determinant");
  return {d, -b, -c, a};
}

FuchsianPresentation builtin_group(const std::string& name) {
  FuchsianPresentation grp;
  if (name == "gamma2") {
    grp = {"gamma2",
           {MoebiusMatrix{1, 2, 0, 1}, MoebiusMatrix{1, 0, 2, 1}},
           SurfaceType{0, 3},
           {"a", "b", "aB"}};
  } else if (name == "modular_torus") {
    grp = {"modular_torus",
           {MoebiusMatrix{1, 1, 1, 2}, MoebiusMatrix{1, -1, -1, 2}},
           SurfaceType{1, 1},
           {"abAB"}};
  } else {
    throw UnknownGroup("unknown built-in group '" + name +
                       "' (available: gamma2, modular_torus)");
  }
  for (const MoebiusMatrix& g : grp.generators)
    if (g.det() != 1)
      throw DomainError("builtin group generator must have unit determinant");
  for (const std::string& w : grp.declared_parabolic_words)
    if (classify(evaluate_word(grp, w)) != ElementClass::parabolic)
      throw DomainError("declared cusp word '" + w + "' is not parabolic");
  return grp;
}

ElementClass classify(const MoebiusMatrix& m) {
  if (m.det() != 1)
    throw DomainError("classify requires a unit-determinant matrix");
  const MoebiusMatrix id{1, 0, 0, 1};
  const MoebiusMatrix neg_id{-1, 0, 0, -1};
  if (m == id || m == neg_id) return ElementClass::identity;
  const Rational at = abs_of(m.trace());
  if (at < 2) return ElementClass::elliptic;
  if (at == 2) return ElementClass::parabolic;
  return ElementClass::hyperbolic;
}

double geodesic_length(const MoebiusMatrix& m) {
  if (classify(m) != ElementClass::hyperbolic)
    throw NotHyperbolic("geodesic length is defined only for hyperbolic classes");
  return length_from_abs_trace(abs_of(m.trace()));
}

MoebiusMatrix evaluate_word(const FuchsianPresentation& grp,
                            const std::string& word) {
  const std::vector<int> codes =
      codes_of(word, static_cast<int>(grp.generators.size()));
  MoebiusMatrix m{1, 0, 0, 1};
  for (int code : codes) {
    const MoebiusMatrix& g = grp.generators[static_cast<std::size_t>(code / 2)];
    m = m * ((code & 1) ? g.inverse() : g);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Word utilities
// ---------------------------------------------------------------------------

int letter_rank(char c) { return code_of(c); }

std::string canonical_class_word(const std::string& word) {
  std::vector<int> w = cyclic_reduce(codes_of(word, 0));
  const std::size_t n = w.size();
  if (n == 0) return "";
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int x = w[(r + i) % n];
      const int y = w[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  std::vector<int> rotated(n);
  for (std::size_t i = 0; i < n; ++i) rotated[i] = w[(best + i) % n];
  return string_of(rotated);
}

bool is_primitive_word(const std::string& word) {
  const std::vector<int> w = cyclic_reduce(codes_of(word, 0));
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; periodic && i + d < n; ++i)
      periodic = (w[i] == w[i + d]);
    if (periodic) return false;
  }
  return true;
}

std::string inverse_word(const std::string& word) {
  const std::vector<int> codes = codes_of(word, 0);
  std::vector<int> inv(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    inv[i] = codes[codes.size() - 1 - i] ^ 1;
  return string_of(inv);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

LengthSpectrum enumerate_spectrum(const FuchsianPresentation& grp, double L,
                                  int max_word_len, int workers) {
  if (grp.generators.empty())
    throw DomainError("enumerate_spectrum requires at least one generator");
  for (const MoebiusMatrix& g : grp.generators)
    if (g.det() != 1)
      throw DomainError("enumerate_spectrum requires unit-determinant generators");
  if (std::isnan(L) || L <= 0)
    throw DomainError("length cutoff must be positive");
  if (max_word_len < 0)
    throw DomainError("max_word_len must be nonnegative");

  const int num_letters = 2 * static_cast<int>(grp.generators.size());
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(hw == 0 ? 1 : hw);
  }
  workers = std::min(workers, num_letters);

  const double witness = witness_length(grp, max_word_len);

  std::vector<IntMat> int_letters;
  if (integral_generators(grp.generators, &int_letters)) {
    IntOps ops{std::move(int_letters)};
    auto classes = run_walkers(ops, max_word_len, workers);
    return finish(std::move(classes), grp, L, max_word_len, witness);
  }

  RatOps ops;
  ops.gens.reserve(static_cast<std::size_t>(num_letters));
  for (const MoebiusMatrix& g : grp.generators) {
    ops.gens.push_back(g);
    ops.gens.push_back(g.inverse());
  }
  auto classes = run_walkers(ops, max_word_len, workers);
  return finish(std::move(classes), grp, L, max_word_len, witness);
}

LengthSpectrum apply_cutoff(const LengthSpectrum& full, double L) {
  if (std::isnan(L) || L <= 0.0)
    throw DomainError("apply_cutoff: length cutoff must be positive");
  if (L > full.cutoff)
    throw DomainError(
        "apply_cutoff: cannot raise the cutoff of an existing spectrum");
  LengthSpectrum spec = full;
  spec.cutoff = L;
  spec.entries.erase(
      std::remove_if(spec.entries.begin(), spec.entries.end(),
                     [L](const LengthSpectrumEntry& e) { return e.length > L; }),
      spec.entries.end());
  set_cutoff_diagnostics(&spec);
  return spec;
}

}  // namespace cuspdet::fuchsian
