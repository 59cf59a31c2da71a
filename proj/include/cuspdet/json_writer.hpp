// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Deterministic JSON emission.  Everything the tool writes must be
// byte-identical across runs and machines, so this writer controls the
// serialization completely: keys appear in insertion order, floating-point
// values are printed with 17 significant digits (enough to reconstruct the
// exact double on read-back), and there is no locale or whitespace
// dependence.  Parsing is delegated to a conventional JSON library; only
// output needs this level of control.

#ifndef CUSPDET_JSON_WRITER_HPP
#define CUSPDET_JSON_WRITER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cuspdet::io {

// 17-significant-digit rendering of a finite double ("%.17g"); the string
// parses back to the identical bit pattern.  Non-finite values render as
// "null" so the output stays strict JSON.
std::string format_double17(double v);

// String body with JSON escapes applied (quotes not included).
std::string json_escape(std::string_view s);

// Streaming writer for compact single-line JSON.  Commas are inserted
// automatically; the caller is responsible for well-formed nesting (keys
// only inside objects, one value per key).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();

  JsonWriter& key(std::string_view k);

  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(double v);  // format_double17; non-finite -> null
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& null();

  // Shorthand for key(k) followed by value(v).
  template <class T>
  JsonWriter& field(std::string_view k, T&& v) {
    key(k);
    return value(std::forward<T>(v));
  }
  JsonWriter& field_null(std::string_view k) {
    key(k);
    return null();
  }

  const std::string& str() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  void separate();  // comma handling before a key or a bare value
  void raw(std::string_view text);

  std::string out_;
  std::vector<bool> first_;  // per nesting level: no value emitted yet
  bool pending_key_ = false;
};

}  // namespace cuspdet::io

#endif  // CUSPDET_JSON_WRITER_HPP
