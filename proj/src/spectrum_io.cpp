// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#include <cuspdet/spectrum_io.hpp>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

#include <cuspdet/errors.hpp>
#include <cuspdet/json_writer.hpp>

namespace cuspdet::io {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail_line(std::size_t line_no, const std::string& msg) {
  throw IoError("spectrum line " + std::to_string(line_no) + ": " + msg);
}

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    fail_line(line_no, e.what());
  }
}

const json& require_key(const json& obj, const char* key,
                        std::size_t line_no) {
  const auto it = obj.find(key);
  if (it == obj.end())
    fail_line(line_no, "missing key \"" + std::string(key) + "\"");
  return *it;
}

double require_number(const json& obj, const char* key, std::size_t line_no) {
  const json& v = require_key(obj, key, line_no);
  if (!v.is_number())
    fail_line(line_no, "key \"" + std::string(key) + "\" must be a number");
  return v.get<double>();
}

long long require_integer(const json& obj, const char* key,
                          std::size_t line_no) {
  const json& v = require_key(obj, key, line_no);
  if (!v.is_number_integer())
    fail_line(line_no, "key \"" + std::string(key) + "\" must be an integer");
  return v.get<long long>();
}

std::string require_string(const json& obj, const char* key,
                           std::size_t line_no) {
  const json& v = require_key(obj, key, line_no);
  if (!v.is_string())
    fail_line(line_no, "key \"" + std::string(key) + "\" must be a string");
  return v.get<std::string>();
}

// Length-like header field: null encodes +infinity, absent fields default
// to it as well (plain exports carry no diagnostics).
double length_field(const json& obj, const char* key, std::size_t line_no,
                    bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) fail_line(line_no, "missing key \"" + std::string(key) + "\"");
    return kInf;
  }
  if (it->is_null()) return kInf;
  if (!it->is_number())
    fail_line(line_no,
              "key \"" + std::string(key) + "\" must be a number or null");
  return it->get<double>();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

void append_header(const fuchsian::LengthSpectrum& sp, bool diagnostics,
                   std::string* out) {
  JsonWriter w;
  w.begin_object().field("g", sp.surface.g).field("n", sp.surface.n);
  w.key("cutoff");
  if (std::isfinite(sp.cutoff))
    w.value(sp.cutoff);
  else
    w.null();
  w.field("max_word_len", sp.max_word_len).field("group", sp.group);
  if (diagnostics) {
    w.key("l_stable");
    if (std::isfinite(sp.l_stable))
      w.value(sp.l_stable);
    else
      w.null();
    w.key("witness_next");
    if (std::isfinite(sp.witness_next))
      w.value(sp.witness_next);
    else
      w.null();
  }
  w.end_object();
  out->append(w.take());
  out->push_back('\n');
}

void append_entry(const fuchsian::LengthSpectrumEntry& e, std::string* out) {
  JsonWriter w;
  w.begin_object()
      .field("length", e.length)
      .field("trace", e.trace)
      .field("mult", e.multiplicity)
      .field("word", e.word)
      .end_object();
  out->append(w.take());
  out->push_back('\n');
}

}  // namespace

std::string spectrum_to_jsonl(const fuchsian::LengthSpectrum& sp,
                              bool include_diagnostics) {
  std::string out;
  out.reserve(64 + 96 * sp.entries.size());
  append_header(sp, include_diagnostics, &out);
  for (const auto& e : sp.entries) append_entry(e, &out);
  return out;
}

void write_spectrum(const fuchsian::LengthSpectrum& sp, std::ostream& out,
                    bool include_diagnostics) {
  const std::string text = spectrum_to_jsonl(sp, include_diagnostics);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_spectrum_file(const fuchsian::LengthSpectrum& sp,
                         const std::string& path, bool include_diagnostics) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open spectrum file for writing: " + path);
  write_spectrum(sp, out, include_diagnostics);
  out.flush();
  if (!out) throw IoError("failed writing spectrum file: " + path);
}

fuchsian::LengthSpectrum read_spectrum(std::istream& in) {
  fuchsian::LengthSpectrum sp;
  bool have_header = false;
  std::size_t line_no = 0;
  double prev_length = -kInf;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const json obj = parse_line(line, line_no);
    if (!obj.is_object()) fail_line(line_no, "expected a JSON object");

    if (!have_header) {
      const long long g = require_integer(obj, "g", line_no);
      const long long n = require_integer(obj, "n", line_no);
      try {
        sp.surface = SurfaceType(static_cast<int>(g), static_cast<int>(n));
      } catch (const DomainError& e) {
        fail_line(line_no, e.what());
      }
      sp.cutoff = length_field(obj, "cutoff", line_no, /*required=*/true);
      if (std::isnan(sp.cutoff) || sp.cutoff <= 0.0)
        fail_line(line_no, "cutoff must be positive or null");
      sp.max_word_len =
          static_cast<int>(require_integer(obj, "max_word_len", line_no));
      if (sp.max_word_len < 0)
        fail_line(line_no, "max_word_len must be non-negative");
      sp.group = require_string(obj, "group", line_no);
      sp.l_stable = length_field(obj, "l_stable", line_no, /*required=*/false);
      sp.witness_next =
          length_field(obj, "witness_next", line_no, /*required=*/false);
      have_header = true;
      continue;
    }

    fuchsian::LengthSpectrumEntry e;
    e.length = require_number(obj, "length", line_no);
    e.trace = require_number(obj, "trace", line_no);
    e.multiplicity = require_integer(obj, "mult", line_no);
    e.word = require_string(obj, "word", line_no);
    if (!std::isfinite(e.length) || e.length <= 0.0)
      fail_line(line_no, "length must be a positive finite number");
    if (!std::isfinite(e.trace) || std::abs(e.trace) <= 2.0)
      fail_line(line_no, "trace must be hyperbolic (|trace| > 2)");
    if (e.multiplicity < 1) fail_line(line_no, "mult must be >= 1");
    if (e.length < prev_length)
      fail_line(line_no, "entries must be sorted by length");
    prev_length = e.length;
    sp.entries.push_back(std::move(e));
  }

  if (!have_header) throw IoError("spectrum input has no header line");

  // Normalize the derived fields (complete_below, cutoff warnings) from
  // whatever diagnostics the file carried.
  return fuchsian::apply_cutoff(sp, sp.cutoff);
}

fuchsian::LengthSpectrum read_spectrum_string(const std::string& text) {
  std::istringstream in(text);
  return read_spectrum(in);
}

fuchsian::LengthSpectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open spectrum file: " + path);
  return read_spectrum(in);
}

std::string cache_path(const std::string& cache_dir, const std::string& group,
                       int max_word_len) {
  std::string name;
  name.reserve(group.size());
  for (char ch : group) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_' || ch == '-';
    name.push_back(ok ? ch : '_');
  }
  return cache_dir + "/" + name + "_w" + std::to_string(max_word_len) +
         ".jsonl";
}

std::optional<fuchsian::LengthSpectrum> cache_lookup(
    const std::string& cache_dir, const std::string& group, int max_word_len) {
  const std::string path = cache_path(cache_dir, group, max_word_len);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  fuchsian::LengthSpectrum sp = read_spectrum_file(path);
  if (sp.group != group || sp.max_word_len != max_word_len)
    throw IoError("cache file " + path +
                  " does not match the requested spectrum (group=" + group +
                  ", max_word_len=" + std::to_string(max_word_len) + ")");
  if (std::isfinite(sp.cutoff))
    throw IoError("cache file " + path +
                  " holds a truncated spectrum; the cache stores uncut "
                  "enumerations only");
  return sp;
}

void cache_store(const std::string& cache_dir,
                 const fuchsian::LengthSpectrum& uncut) {
  if (std::isfinite(uncut.cutoff))
    throw DomainError("cache_store requires an uncut spectrum (cutoff = "
                      "infinity)");
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec)
    throw IoError("cannot create cache directory " + cache_dir + ": " +
                  ec.message());

  const std::string path =
      cache_path(cache_dir, uncut.group, uncut.max_word_len);
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  write_spectrum_file(uncut, tmp, /*include_diagnostics=*/true);
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move cache file into place: " + path);
  }
}

}  // namespace cuspdet::io
