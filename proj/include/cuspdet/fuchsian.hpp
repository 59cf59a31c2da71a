// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Concrete torsion-free Fuchsian groups of type (g, n) and enumeration of
// their primitive geodesic length spectra.
//
// Words are strings over the generator alphabet: generator i is the
// lowercase letter 'a' + i, its inverse the uppercase 'A' + i, and the
// alphabet is ordered a < A < b < B < ... (so inverse pairs are adjacent).
// A conjugacy class is keyed by its canonical word: cyclically reduced,
// primitive, and lexicographically minimal among its rotations in that
// order.  gamma and gamma^(-1) count as distinct classes whenever their
// canonical words differ, matching the Selberg product over all primitive
// hyperbolic classes.

#ifndef CUSPDET_FUCHSIAN_HPP
#define CUSPDET_FUCHSIAN_HPP

#include <string>
#include <vector>

#include <cuspdet/precision.hpp>
#include <cuspdet/surface.hpp>

namespace cuspdet::fuchsian {

// ---------------------------------------------------------------------------
// Matrices and presentations
// ---------------------------------------------------------------------------

// Unit-determinant 2x2 matrix with exact rational entries, identified
// projectively with its negative.
struct MoebiusMatrix {
  Rational a, b, c, d;

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }
  MoebiusMatrix operator*(const MoebiusMatrix& rhs) const;
  MoebiusMatrix inverse() const;  // requires det == 1
  bool operator==(const MoebiusMatrix& rhs) const = default;
};

enum class ElementClass { identity, parabolic, hyperbolic, elliptic };

struct FuchsianPresentation {
  std::string name;
  std::vector<MoebiusMatrix> generators;  // free generators
  SurfaceType surface;
  std::vector<std::string> declared_parabolic_words;
};

// Built-in presentations:
//   "gamma2"        — generated by z -> z + 2 and z -> z/(2z + 1); free of
//                     rank 2, type (0, 3), all three cusp words parabolic.
//   "modular_torus" — once-punctured torus group with generator traces
//                     (3, 3) and parabolic commutator; free of rank 2,
//                     type (1, 1).
// Throws UnknownGroup for anything else.
FuchsianPresentation builtin_group(const std::string& name);

// Classification by trace (exact rational arithmetic): +/- identity,
// |tr| < 2 elliptic, |tr| = 2 parabolic, |tr| > 2 hyperbolic.
// DomainError unless det == 1.
ElementClass classify(const MoebiusMatrix& m);

// 2 arccosh(|tr|/2); NotHyperbolic unless classify says hyperbolic.
double geodesic_length(const MoebiusMatrix& m);

// Evaluate a word over the presentation's alphabet to a matrix
// (DomainError on letters outside the alphabet; empty word = identity).
MoebiusMatrix evaluate_word(const FuchsianPresentation& grp,
                            const std::string& word);

// ---------------------------------------------------------------------------
// Word utilities (exposed for the property tests)
// ---------------------------------------------------------------------------

// Alphabet rank: a < A < b < B < ...; returns -1 for foreign characters.
int letter_rank(char c);

// Canonical conjugacy key: cyclic reduction, then the lexicographically
// minimal rotation under letter_rank order.
std::string canonical_class_word(const std::string& word);

// True when the word is not a proper power u^k, k >= 2 (as a cyclic word).
bool is_primitive_word(const std::string& word);

// Inverse word (reversed, case-swapped letters).
std::string inverse_word(const std::string& word);

// ---------------------------------------------------------------------------
// Length spectra
// ---------------------------------------------------------------------------

struct LengthSpectrumEntry {
  double length = 0.0;       // 2 arccosh(|trace|/2)
  double trace = 0.0;        // signed trace of the canonical representative
  long long multiplicity = 1;  // classes sharing this length (see below)
  std::string word;          // canonical word
};

struct LengthSpectrum {
  SurfaceType surface{0, 3};
  double cutoff = 0.0;  // requested length bound L
  int max_word_len = 0;
  std::string group;  // presentation name (provenance)

  // One entry per conjugacy class, sorted by (length, word); each entry's
  // multiplicity is the number of classes sharing its length (coincident
  // lengths are binned by exact trace, which the built-ins make unambiguous).
  std::vector<LengthSpectrumEntry> entries;

  // Enumeration diagnostics (see enumerate_spectrum).
  double l_stable = 0.0;
  double witness_next = 0.0;
  double complete_below = 0.0;
  bool incomplete_cutoff = false;
  std::vector<std::string> warnings;
};

// Enumerate all primitive hyperbolic conjugacy classes of word length
// <= max_word_len and geodesic length <= L.
//
// Diagnostics reported with the result:
//   l_stable      — smallest geodesic length among classes first appearing
//                   at word lengths max_word_len-1 or max_word_len (+inf
//                   when those shells are empty): below this value the
//                   spectrum is unchanged from the run two letters shorter.
//   witness_next  — geodesic length of the explicit word g_1^max_word_len
//                   g_2, a class at word length max_word_len + 1; any
//                   L >= witness_next is provably not coverable at this
//                   max_word_len, triggering the IncompleteCutoff warning.
//   complete_below = min(l_stable, witness_next), the trusted range.
//
// Throws EllipticFound on torsion, OverflowError when integer matrix
// entries outgrow the safe exact range (shorten max_word_len), and
// DomainError on invalid parameters.  `workers` 0 means auto; the result
// is byte-identical for every worker count.
LengthSpectrum enumerate_spectrum(const FuchsianPresentation& grp, double L,
                                  int max_word_len, int workers = 0);

// Restrict a spectrum to a smaller cutoff L <= full.cutoff: entries above L
// are dropped and the cutoff warnings are regenerated from the stored
// diagnostics.  The result is identical to enumerating with cutoff L
// directly, which lets an uncut enumeration (cutoff = infinity) serve as a
// cache for any requested L.  DomainError when L is invalid or larger than
// the spectrum's own cutoff.
LengthSpectrum apply_cutoff(const LengthSpectrum& full, double L);

}  // namespace cuspdet::fuchsian

#endif  // CUSPDET_FUCHSIAN_HPP
