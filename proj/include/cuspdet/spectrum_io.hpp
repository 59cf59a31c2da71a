// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Length-spectrum serialization and the on-disk spectrum cache.
//
// File format: JSON lines.  The first line is a header object with keys
// {g, n, cutoff, max_word_len, group} in that order; every following line
// is one entry object with keys {length, trace, mult, word}.  Entries keep
// the spectrum's (length, word) order.  Floats carry 17 significant
// digits, so write -> read -> write reproduces the file byte for byte.
// An infinite cutoff is stored as null.  Cache files append the
// enumeration diagnostics (l_stable, witness_next) to the header; the
// reader accepts and restores them, and ignores unknown keys.

#ifndef CUSPDET_SPECTRUM_IO_HPP
#define CUSPDET_SPECTRUM_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <cuspdet/fuchsian.hpp>

namespace cuspdet::io {

// Render the spectrum in the JSON-lines format (trailing newline
// included).  include_diagnostics adds l_stable and witness_next to the
// header, which the cache needs but plain exports omit.
std::string spectrum_to_jsonl(const fuchsian::LengthSpectrum& sp,
                              bool include_diagnostics = false);

void write_spectrum(const fuchsian::LengthSpectrum& sp, std::ostream& out,
                    bool include_diagnostics = false);
void write_spectrum_file(const fuchsian::LengthSpectrum& sp,
                         const std::string& path,
                         bool include_diagnostics = false);

// Parse a spectrum from the JSON-lines format.  Blank lines are skipped;
// anything else malformed raises IoError with the offending line number.
// Diagnostic fields absent from plain exports default to +infinity
// (l_stable, witness_next) with no warnings; complete_below and the
// cutoff warnings are regenerated when a new cutoff is applied.
fuchsian::LengthSpectrum read_spectrum(std::istream& in);
fuchsian::LengthSpectrum read_spectrum_string(const std::string& text);
fuchsian::LengthSpectrum read_spectrum_file(const std::string& path);

// Spectrum cache, keyed on (group, max_word_len).  Stored spectra are
// uncut (cutoff = infinity), so one cache entry serves every requested
// cutoff via fuchsian::apply_cutoff.  The directory is created on demand;
// stores write to a temporary file and rename it into place, so a cache
// shared between concurrent runs only ever holds complete files.
std::string cache_path(const std::string& cache_dir, const std::string& group,
                       int max_word_len);

// nullopt on a cache miss; a corrupt cache file raises IoError rather
// than being silently regenerated, since it usually means a configuration
// problem (two tools writing different formats to the same directory).
std::optional<fuchsian::LengthSpectrum> cache_lookup(
    const std::string& cache_dir, const std::string& group, int max_word_len);

void cache_store(const std::string& cache_dir,
                 const fuchsian::LengthSpectrum& uncut);

}  // namespace cuspdet::io

#endif  // CUSPDET_SPECTRUM_IO_HPP
