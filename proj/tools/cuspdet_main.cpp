// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// Command-line front end.  Exit codes: 0 success, 1 computation error,
// 2 usage error.  Every run emits a provenance block; all JSON output is
// deterministic byte for byte for identical invocations (fixed key order,
// 17-significant-digit floats, no timestamps).  Orchestration is
// single-threaded; the spectrum enumeration may parallelize internally.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <cuspdet/acceptance.hpp>
#include <cuspdet/determinant.hpp>
#include <cuspdet/errors.hpp>
#include <cuspdet/formal.hpp>
#include <cuspdet/fuchsian.hpp>
#include <cuspdet/index.hpp>
#include <cuspdet/json_writer.hpp>
#include <cuspdet/spectrum_io.hpp>
#include <cuspdet/specfun.hpp>
#include <cuspdet/surface.hpp>
#include <cuspdet/zeta.hpp>

namespace {

using cuspdet::io::JsonWriter;

constexpr const char* kVersion = "0.1.0";

// Recorded with every spectrum-derived output; the enumeration convention
// is a choice, so consumers must be able to see which one produced a file.
constexpr const char* kClassConvention =
    "conjugacy classes keyed by the lexicographically minimal rotation of "
    "the cyclically reduced word over the alphabet a < A < b < B; a class "
    "and its inverse count separately; multiplicity = classes sharing a "
    "length within 1e-9";

using Params = std::vector<std::pair<std::string, std::string>>;

std::string num(double v) { return cuspdet::io::format_double17(v); }

void write_provenance(JsonWriter& w, const std::string& sub,
                      const Params& params, int digits,
                      bool with_convention) {
  w.key("provenance").begin_object();
  w.field("tool", "cuspdet").field("version", kVersion);
  w.field("subcommand", sub);
  w.key("parameters").begin_object();
  for (const auto& [k, v] : params) w.field(k, v);
  w.field("digits", std::to_string(digits));
  w.end_object();
  if (with_convention) w.field("class_convention", kClassConvention);
  w.end_object();
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw cuspdet::IoError("cannot open output file: " + out_path);
  out << doc << "\n";
  if (!out) throw cuspdet::IoError("failed writing output file: " + out_path);
}

const char* error_type(const cuspdet::Error& e) {
  using namespace cuspdet;
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const AlphabetMismatch*>(&e)) return "AlphabetMismatch";
  if (dynamic_cast<const MixedGenerators*>(&e)) return "MixedGenerators";
  if (dynamic_cast<const UnknownGroup*>(&e)) return "UnknownGroup";
  if (dynamic_cast<const NotHyperbolic*>(&e)) return "NotHyperbolic";
  if (dynamic_cast<const EllipticFound*>(&e)) return "EllipticFound";
  if (dynamic_cast<const DivergedError*>(&e)) return "DivergedError";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  return "Error";
}

std::string rational_str(const cuspdet::Rational& q) {
  const auto n = boost::multiprecision::numerator(q);
  const auto d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

void write_string_array(JsonWriter& w, const char* key,
                        const std::vector<std::string>& items) {
  w.key(key).begin_array();
  for (const auto& s : items) w.value(s);
  w.end_array();
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumOpts {
  std::string group;
  double L = 0.0;
  int max_word = 0;
  int workers = 0;
  std::string out;
  int digits = 50;
};

int cmd_spectrum(const SpectrumOpts& o) {
  const auto grp = cuspdet::fuchsian::builtin_group(o.group);

  cuspdet::fuchsian::LengthSpectrum sp;
  const char* cache_env = std::getenv("CUSPDET_CACHE_DIR");
  const std::string cache_dir = cache_env ? cache_env : "";
  if (!cache_dir.empty()) {
    // The cache stores the uncut enumeration per (group, word bound);
    // restricting it to the requested cutoff reproduces a direct run byte
    // for byte, so cache state never leaks into the output.
    auto hit = cuspdet::io::cache_lookup(cache_dir, o.group, o.max_word);
    cuspdet::fuchsian::LengthSpectrum full;
    if (hit) {
      full = std::move(*hit);
    } else {
      full = cuspdet::fuchsian::enumerate_spectrum(
          grp, std::numeric_limits<double>::infinity(), o.max_word,
          o.workers);
      cuspdet::io::cache_store(cache_dir, full);
    }
    sp = cuspdet::fuchsian::apply_cutoff(full, o.L);
  } else {
    sp = cuspdet::fuchsian::enumerate_spectrum(grp, o.L, o.max_word,
                                               o.workers);
  }

  JsonWriter w;
  w.begin_object();
  Params params = {{"group", o.group},
                   {"L", num(o.L)},
                   {"max-word", std::to_string(o.max_word)}};
  if (!o.out.empty()) params.emplace_back("out", o.out);
  write_provenance(w, "spectrum", params, o.digits, true);
  w.field("group", sp.group)
      .field("g", sp.surface.g)
      .field("n", sp.surface.n)
      .field("cutoff", sp.cutoff)
      .field("max_word_len", sp.max_word_len)
      .field("entries", static_cast<long long>(sp.entries.size()));
  w.key("l_stable");
  std::isfinite(sp.l_stable) ? w.value(sp.l_stable) : w.null();
  w.key("witness_next");
  std::isfinite(sp.witness_next) ? w.value(sp.witness_next) : w.null();
  w.key("complete_below");
  std::isfinite(sp.complete_below) ? w.value(sp.complete_below) : w.null();
  w.field("incomplete_cutoff", sp.incomplete_cutoff);
  write_string_array(w, "warnings", sp.warnings);
  w.end_object();

  if (o.out.empty()) {
    // Spectrum lines own standard output; the summary goes to stderr so
    // the stream stays machine-readable.
    cuspdet::io::write_spectrum(sp, std::cout);
    std::cerr << w.str() << "\n";
  } else {
    cuspdet::io::write_spectrum_file(sp, o.out);
    std::cout << w.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

struct ZetaOpts {
  std::string spectrum_path;
  double s = 0.0;
  bool derivative = false;
  bool at_one = false;
  std::string out;
  int digits = 50;
};

int cmd_zeta(const ZetaOpts& o) {
  const auto sp = cuspdet::io::read_spectrum_file(o.spectrum_path);

  JsonWriter w;
  w.begin_object();
  Params params = {{"spectrum", o.spectrum_path}};
  if (!o.at_one) params.emplace_back("s", num(o.s));
  if (o.derivative) params.emplace_back("derivative", "true");
  if (o.at_one) params.emplace_back("at-one", "true");
  write_provenance(w, "zeta", params, o.digits, true);

  std::vector<std::string> assumptions;
  if (o.at_one) {
    const auto r = cuspdet::zeta::zeta_prime_at_1(
        sp, {0.2, 0.1, 0.05, 0.025});
    w.field("s", 1.0).field("mode", "prime_at_one");
    w.key("log_value");
    r.value > 0.0 ? w.value(std::log(r.value)) : w.null();
    w.field_null("tail_estimate").field_null("k_cut");
    w.field("value", r.value).field("abs_error", r.abs_error);
    assumptions.push_back(
        "assumes a simple zero of the zeta function at s = 1 "
        "(value = lim Z(1+eps)/eps)");
    assumptions.push_back(
        "LOW-CONFIDENCE: extrapolated from a truncated length spectrum; "
        "abs_error is the final extrapolation spread and shrinks only as "
        "the cutoff grows");
  } else {
    const auto r = o.derivative
                       ? cuspdet::zeta::zeta_log_derivative(sp, o.s)
                       : cuspdet::zeta::log_selberg_zeta(sp, o.s);
    w.field("s", o.s).field("mode",
                            o.derivative ? "log_derivative" : "log_value");
    w.field("log_value", r.log_value)
        .field("tail_estimate", r.tail_estimate)
        .field("k_cut", r.k_cut);
    assumptions.insert(assumptions.end(), r.warnings.begin(),
                       r.warnings.end());
  }
  assumptions.insert(assumptions.end(), sp.warnings.begin(),
                     sp.warnings.end());
  write_string_array(w, "assumptions", assumptions);
  w.end_object();
  emit(w.str(), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// det
// ---------------------------------------------------------------------------

struct DetOpts {
  std::string spectrum_path;
  double s = 0.0;
  bool dbar = false;
  int compact_g = 0;  // 0 = not requested
  std::string out;
  int digits = 50;
};

int cmd_det(const DetOpts& o) {
  JsonWriter w;
  w.begin_object();

  if (o.compact_g > 0) {
    Params params = {{"s", num(o.s)},
                     {"compact-g", std::to_string(o.compact_g)}};
    write_provenance(w, "det", params, o.digits, false);
    const auto lg =
        cuspdet::determinant::sarnak_compact_factor_log(o.compact_g, o.s);
    w.field("s", o.s).field("operator", "compact");
    w.key("det_value");
    std::abs(lg.value) < 709.0 ? w.value(std::exp(lg.value)) : w.null();
    w.field("log_det", lg.value).field("abs_error", lg.abs_error);
    w.key("inputs")
        .begin_object()
        .field("s", o.s)
        .field("g", o.compact_g)
        .field("n", 0)
        .field_null("spectrum")
        .end_object();
    write_string_array(
        w, "assumptions",
        {"compact-surface factor core(s)^(2g-2); no cusp term, no spectrum "
         "input"});
  } else {
    const auto sp = cuspdet::io::read_spectrum_file(o.spectrum_path);
    const cuspdet::SurfaceType st = sp.surface;
    Params params = {{"spectrum", o.spectrum_path}, {"s", num(o.s)}};
    if (o.dbar) params.emplace_back("dbar", "true");
    write_provenance(w, "det", params, o.digits, true);
    const auto rep = o.dbar
                         ? cuspdet::determinant::det_dbar(st, sp, o.s)
                         : cuspdet::determinant::det_geometric(st, sp, o.s);
    w.field("s", o.s).field("operator", o.dbar ? "dbar" : "geometric");
    w.key("det_value");
    rep.det_value ? w.value(*rep.det_value) : w.null();
    w.field("log_det", rep.log_det);
    w.key("inputs")
        .begin_object()
        .field("s", rep.inputs.s)
        .field("g", rep.inputs.g)
        .field("n", rep.inputs.n)
        .field("spectrum", rep.inputs.spectrum)
        .end_object();
    write_string_array(w, "assumptions", rep.assumptions);
  }
  w.end_object();
  emit(w.str(), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

struct IndexOpts {
  int g = 0;
  int n = 0;
  int l_lo = -6;
  int l_hi = 6;
  std::string out;
  int digits = 50;
};

int cmd_index(const IndexOpts& o) {
  const cuspdet::SurfaceType st(o.g, o.n);
  const auto prec = o.digits >= 100 ? cuspdet::Precision::digits100
                                    : cuspdet::Precision::digits50;
  const auto hc = cuspdet::index::heat_coefficients(st, prec);

  JsonWriter w;
  w.begin_object();
  Params params = {{"g", std::to_string(o.g)},
                   {"n", std::to_string(o.n)},
                   {"l-range", std::to_string(o.l_lo) + "," +
                                   std::to_string(o.l_hi)}};
  write_provenance(w, "index", params, o.digits, false);
  w.key("surface")
      .begin_object()
      .field("g", st.g)
      .field("n", st.n)
      .field("chi", st.chi())
      .end_object();
  w.key("l_range").begin_array().value(o.l_lo).value(o.l_hi).end_array();

  bool consistent = true;
  w.key("rows").begin_array();
  for (int ell = o.l_lo; ell <= o.l_hi; ++ell) {
    const long long idx = cuspdet::index::index_dbar(ell, st);
    const long long ker = cuspdet::index::dim_ker(ell, st);
    const long long coker = cuspdet::index::dim_coker(ell, st);
    const int sign = ell <= 0 ? 1 : -1;
    const cuspdet::Rational closed =
        (cuspdet::Rational(1, 2) - ell) * st.chi() +
        cuspdet::Rational(st.n * sign, 2);
    if (idx != ker - coker || closed != cuspdet::Rational(idx))
      consistent = false;
    w.begin_object()
        .field("ell", ell)
        .field("index", idx)
        .field("ker", ker)
        .field("coker", coker)
        .field("eta", rational_str(cuspdet::index::eta_horizontal(ell, st)))
        .field("divisor_degree", cuspdet::index::divisor_degree(ell, st))
        .end_object();
  }
  w.end_array();

  w.key("heat_coefficients")
      .begin_object()
      .field("a_m1", rational_str(hc.a_m1))
      .field("a_0", rational_str(hc.a_0))
      .field("a_tilde_mhalf", hc.a_tilde_mhalf)
      .field("a_mhalf", hc.a_mhalf)
      .field("a_m1_genus_reading", rational_str(hc.a_m1_genus_reading))
      .end_object();
  w.field("closed_form_consistent", consistent);
  w.end_object();
  emit(w.str(), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------------

struct ClassesOpts {
  int degree = 12;
  std::string out;
  int digits = 50;
};

int cmd_classes(const ClassesOpts& o) {
  using namespace cuspdet::formal;

  JsonWriter w;
  w.begin_object();
  write_provenance(w, "classes", {{"degree", std::to_string(o.degree)}},
                   o.digits, false);

  bool all_equal = true;
  w.key("checks").begin_array();

  for (int ell = -3; ell <= 5; ++ell) {
    const auto rep = todd_fiber_compare(ell, o.degree);
    all_equal = all_equal && rep.equal;
    w.begin_object()
        .field("name", "todd-fiber-bernoulli")
        .field("ell", ell)
        .field("degree", rep.degree_checked)
        .field("equal", rep.equal)
        .end_object();
  }

  {
    // Half-coth kernel against the even Bernoulli series.
    const int D = 20;
    const GradedSeries hc = univariate_kernel(KernelKind::half_coth, 0, D);
    const auto B = cuspdet::specfun::bernoulli_numbers(D);
    GeneratorAlphabet alpha;
    alpha.univariate = true;
    GradedSeries want(alpha, D);
    cuspdet::Rational fact = 1;
    for (int k = 0; k <= D; ++k) {
      if (k > 0) fact *= k;
      if (k % 2 == 1) continue;
      Monomial m;
      if (k > 0)
        m.factors.emplace_back(make_gen(GenKind::x, 0),
                               static_cast<std::uint32_t>(k));
      want.add_term(m, B.entries[static_cast<std::size_t>(k)] / fact);
    }
    const bool equal = (hc == want);
    all_equal = all_equal && equal;
    w.begin_object()
        .field("name", "half-coth-even-bernoulli")
        .field("degree", D)
        .field("equal", equal)
        .end_object();
  }

  {
    const int D = 20;
    const GradedSeries eta = univariate_kernel(KernelKind::eta_form, 0, D);
    bool odd = true;
    for (const auto& [m, coeff] : eta.terms()) {
      const std::uint32_t p =
          m.factors.empty() ? 0 : m.factors.front().second;
      if (p % 2 == 0) odd = false;
      (void)coeff;
    }
    Monomial x1;
    x1.factors.emplace_back(make_gen(GenKind::x, 0), 1u);
    const bool equal = odd && eta.coefficient(x1) == cuspdet::Rational(1, 12);
    all_equal = all_equal && equal;
    w.begin_object()
        .field("name", "eta-form-odd-leading-x-over-12")
        .field("degree", D)
        .field("equal", equal)
        .end_object();
  }

  {
    Monomial k1;
    k1.factors.emplace_back(make_gen(GenKind::kappa, 1), 1u);
    for (int ell = -3; ell <= 5; ++ell) {
      const GradedSeries dens = index_density(ell, 2, 1, 4);
      const bool equal = dens.coefficient(k1) ==
                         cuspdet::Rational(6 * ell * ell - 6 * ell + 1, 12);
      all_equal = all_equal && equal;
      w.begin_object()
          .field("name", "kappa-1-coefficient")
          .field("ell", ell)
          .field("equal", equal)
          .end_object();
    }
  }

  for (int ell = 0; ell <= 1; ++ell) {
    for (int n = 0; n <= 4; ++n) {
      const auto rep = bini_compare(ell, n, o.degree);
      all_equal = all_equal && rep.equal;
      w.begin_object()
          .field("name", "interior-collapse")
          .field("ell", ell)
          .field("n", n)
          .field("degree", rep.degree_checked)
          .field("equal", rep.equal)
          .end_object();
    }
  }

  w.end_array();
  w.field("all_equal", all_equal);
  w.end_object();
  emit(w.str(), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

int cmd_selftest(int digits) {
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);

  JsonWriter w;
  w.begin_object();
  write_provenance(w, "selftest", {}, digits, false);
  w.end_object();
  std::cout << w.str() << "\n";

  cuspdet::acceptance::Options opt;
  opt.cli_path = ec ? std::string() : self.string();
  return cuspdet::acceptance::run_main(opt, std::cout);
}

// ---------------------------------------------------------------------------

bool parse_l_range(const std::string& text, int* lo, int* hi) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    *lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    *hi = std::stoi(b, &used);
    if (used != b.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return *lo <= *hi && *hi - *lo <= 10000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuspdet — spectral invariants of finite-area hyperbolic "
               "surfaces with cusps"};
  app.require_subcommand(1);
  int digits = 50;
  app.add_option("--digits", digits,
                 "working precision for the special-function kernels "
                 "(50 or 100; default 50 everywhere)")
      ->check(CLI::IsMember({50, 100}));

  SpectrumOpts so;
  auto* sub_spectrum = app.add_subcommand(
      "spectrum", "enumerate a primitive geodesic length spectrum");
  sub_spectrum->add_option("--group", so.group,
                           "built-in group (gamma2, modular_torus)")
      ->required();
  sub_spectrum->add_option("--L", so.L, "geodesic length cutoff")->required();
  sub_spectrum->add_option("--max-word", so.max_word, "word length bound")
      ->required()
      ->check(CLI::Range(0, 64));
  sub_spectrum->add_option("--workers", so.workers,
                           "enumeration workers (0 = auto; the result does "
                           "not depend on this)")
      ->check(CLI::Range(0, 256));
  sub_spectrum->add_option("--out", so.out, "write the spectrum here "
                                            "(default: standard output)");

  ZetaOpts zo;
  auto* sub_zeta =
      app.add_subcommand("zeta", "evaluate the Selberg zeta function");
  sub_zeta->add_option("--spectrum", zo.spectrum_path,
                       "length-spectrum file (JSON lines)")
      ->required();
  auto* zeta_s = sub_zeta->add_option("--s", zo.s, "evaluation point (s > 1)");
  sub_zeta->add_flag("--derivative", zo.derivative,
                     "logarithmic derivative (log Z)'(s) instead of log Z(s)");
  sub_zeta->add_flag("--at-one", zo.at_one,
                     "extrapolate Z'(1) assuming a simple zero "
                     "(low-confidence)");
  sub_zeta->add_option("--out", zo.out, "write the JSON report here");

  DetOpts dopts;
  auto* sub_det =
      app.add_subcommand("det", "zeta-regularized determinant report");
  auto* det_spectrum = sub_det->add_option(
      "--spectrum", dopts.spectrum_path, "length-spectrum file (JSON lines)");
  sub_det->add_option("--s", dopts.s, "evaluation point (s > 1)")->required();
  sub_det->add_flag("--dbar", dopts.dbar,
                    "report the dbar-Laplacian determinant instead");
  auto* det_compact = sub_det->add_option(
      "--compact-g", dopts.compact_g,
      "compact-surface factor for this genus (no spectrum input)");
  if (det_compact) det_compact->check(CLI::Range(2, 1000));
  sub_det->add_option("--out", dopts.out, "write the JSON report here");

  IndexOpts io_opts;
  auto* sub_index =
      app.add_subcommand("index", "exact index / kernel / cokernel table");
  sub_index->add_option("--g", io_opts.g, "genus")->required()
      ->check(CLI::Range(0, 1000000));
  sub_index->add_option("--n", io_opts.n, "number of cusps")->required()
      ->check(CLI::Range(0, 1000000));
  std::string l_range = "-6,6";
  sub_index->add_option("--l-range", l_range,
                        "inclusive twist range \"lo,hi\" (default -6,6)");
  sub_index->add_option("--out", io_opts.out, "write the JSON table here");

  ClassesOpts co;
  auto* sub_classes = app.add_subcommand(
      "classes", "tautological-class identity checks (exact rationals)");
  sub_classes->add_option("--degree", co.degree,
                          "truncation degree (default 12)")
      ->check(CLI::Range(1, 24));
  sub_classes->add_option("--out", co.out, "write the JSON report here");

  auto* sub_selftest =
      app.add_subcommand("selftest", "run the full acceptance suite");
  (void)sub_selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints contextual help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (app.got_subcommand(sub_spectrum)) {
      if (!(so.L > 0.0) || std::isnan(so.L) || std::isinf(so.L)) {
        std::cerr << "error: --L must be a positive finite length\n";
        return 2;
      }
      so.digits = digits;
      return cmd_spectrum(so);
    }
    if (app.got_subcommand(sub_zeta)) {
      if (zo.at_one && zo.derivative) {
        std::cerr << "error: --at-one and --derivative are mutually "
                     "exclusive\n";
        return 2;
      }
      if (!zo.at_one && zeta_s->count() == 0) {
        std::cerr << "error: --s is required unless --at-one is given\n";
        return 2;
      }
      zo.digits = digits;
      return cmd_zeta(zo);
    }
    if (app.got_subcommand(sub_det)) {
      const bool compact = det_compact->count() > 0;
      if (compact && (dopts.dbar || det_spectrum->count() > 0)) {
        std::cerr << "error: --compact-g excludes --spectrum and --dbar\n";
        return 2;
      }
      if (!compact && det_spectrum->count() == 0) {
        std::cerr << "error: --spectrum is required unless --compact-g is "
                     "given\n";
        return 2;
      }
      if (!compact) dopts.compact_g = 0;
      dopts.digits = digits;
      return cmd_det(dopts);
    }
    if (app.got_subcommand(sub_index)) {
      if (!parse_l_range(l_range, &io_opts.l_lo, &io_opts.l_hi)) {
        std::cerr << "error: --l-range must be \"lo,hi\" with lo <= hi\n";
        return 2;
      }
      io_opts.digits = digits;
      return cmd_index(io_opts);
    }
    if (app.got_subcommand(sub_classes)) {
      co.digits = digits;
      return cmd_classes(co);
    }
    if (app.got_subcommand(sub_selftest)) {
      return cmd_selftest(digits);
    }
  } catch (const cuspdet::Error& e) {
    JsonWriter w;
    w.begin_object();
    w.key("error")
        .begin_object()
        .field("type", error_type(e))
        .field("message", e.what())
        .end_object();
    w.end_object();
    std::cout << w.str() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: require_subcommand guarantees a branch
}
