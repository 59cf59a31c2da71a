// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.
//
// End-to-end tests of the command-line tool.  Every case shells out to the
// real binary (path injected at compile time), captures both streams and
// the exit status, and checks the JSON against the library evaluated
// in-process on the same inputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <cuspdet/determinant.hpp>
#include <cuspdet/fuchsian.hpp>
#include <cuspdet/index.hpp>
#include <cuspdet/spectrum_io.hpp>
#include <cuspdet/zeta.hpp>

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string& scratch_dir() {
  static const std::string dir = [] {
    const std::string d =
        "/tmp/cuspdet_clitest." + std::to_string(::getpid());
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the binary with the cache disabled unless a cache directory is
// passed explicitly.
RunResult run_cli(const std::vector<std::string>& args,
                  const std::string& cache_dir = "") {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = scratch_dir() + "/stdout." + tag;
  const std::string err_path = scratch_dir() + "/stderr." + tag;
  std::string cmd = "CUSPDET_CACHE_DIR=" + shell_quote(cache_dir) + " " +
                    shell_quote(CUSPDET_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out_path) + " 2> " + shell_quote(err_path);
  const int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

// One torus spectrum file shared by the zeta/det cases.
const std::string& torus_file() {
  static const std::string path = [] {
    const std::string p = scratch_dir() + "/torus6.jsonl";
    const auto r = run_cli({"spectrum", "--group", "modular_torus", "--L",
                            "6", "--max-word", "10", "--out", p});
    if (r.exit_code != 0) return std::string();
    return p;
  }();
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument handling
// ---------------------------------------------------------------------------

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"zeta", "--bogus"}).exit_code == 2);
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  // Missing required options.
  CHECK(run_cli({"spectrum", "--group", "modular_torus", "--L", "5"})
            .exit_code == 2);
  CHECK(run_cli({"index", "--g", "1"}).exit_code == 2);
  CHECK(run_cli({"det", "--spectrum", "x.jsonl"}).exit_code == 2);
  CHECK(run_cli({"zeta", "--spectrum", "x.jsonl"}).exit_code == 2);
  // Mutually exclusive / conflicting flags.
  CHECK(run_cli({"zeta", "--spectrum", "x.jsonl", "--at-one",
                 "--derivative"})
            .exit_code == 2);
  CHECK(run_cli({"det", "--s", "2", "--compact-g", "2", "--spectrum",
                 "x.jsonl"})
            .exit_code == 2);
  // Value validation.
  CHECK(run_cli({"spectrum", "--group", "modular_torus", "--L", "-3",
                 "--max-word", "8"})
            .exit_code == 2);
  CHECK(run_cli({"spectrum", "--group", "modular_torus", "--L", "5",
                 "--max-word", "99"})
            .exit_code == 2);
  CHECK(run_cli({"index", "--g", "1", "--n", "1", "--l-range", "junk"})
            .exit_code == 2);
  CHECK(run_cli({"index", "--g", "1", "--n", "1", "--l-range", "5,-5"})
            .exit_code == 2);
  CHECK(run_cli({"--digits", "60", "index", "--g", "1", "--n", "1"})
            .exit_code == 2);
  const auto bad = run_cli({"zeta", "--bogus"});
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("cuspdet") != std::string::npos);
  CHECK(run_cli({"spectrum", "--help"}).exit_code == 0);
}

// ---------------------------------------------------------------------------
// Failures surface as structured JSON on exit 1
// ---------------------------------------------------------------------------

TEST_CASE("runtime failures report a typed error object") {
  const auto missing =
      run_cli({"zeta", "--spectrum", "/nonexistent/sp.jsonl", "--s", "2"});
  CHECK(missing.exit_code == 1);
  const json me = json::parse(missing.out);
  CHECK(me["error"]["type"] == "IoError");
  CHECK(me["error"]["message"].get<std::string>().find("/nonexistent") !=
        std::string::npos);

  const auto badgroup = run_cli(
      {"spectrum", "--group", "nope", "--L", "5", "--max-word", "6"});
  CHECK(badgroup.exit_code == 1);
  CHECK(json::parse(badgroup.out)["error"]["type"] == "UnknownGroup");

  REQUIRE(!torus_file().empty());
  const auto domain =
      run_cli({"zeta", "--spectrum", torus_file(), "--s", "1"});
  CHECK(domain.exit_code == 1);
  const json de = json::parse(domain.out);
  CHECK(de["error"]["type"] == "DomainError");
  CHECK(de["error"]["message"].get<std::string>().find("s > 1") !=
        std::string::npos);
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

TEST_CASE("spectrum writes the documented file format and summary") {
  const std::string path = scratch_dir() + "/t5.jsonl";
  const auto r = run_cli({"spectrum", "--group", "modular_torus", "--L", "5",
                          "--max-word", "10", "--out", path});
  REQUIRE(r.exit_code == 0);

  const json summary = json::parse(r.out);
  CHECK(summary["provenance"]["tool"] == "cuspdet");
  CHECK(summary["provenance"]["subcommand"] == "spectrum");
  CHECK(summary["provenance"]["parameters"]["digits"] == "50");
  CHECK(summary["provenance"]["class_convention"]
            .get<std::string>()
            .find("lexicographically minimal") != std::string::npos);
  CHECK(summary["group"] == "modular_torus");
  CHECK(summary["g"] == 1);
  CHECK(summary["n"] == 1);
  CHECK(summary["cutoff"] == 5.0);
  CHECK(summary["max_word_len"] == 10);
  CHECK(summary["incomplete_cutoff"] == false);
  CHECK(summary["warnings"].empty());
  CHECK(summary["l_stable"] == 5.4071516618628044);
  CHECK(summary["witness_next"] == 18.87383602733696);

  const auto lines = split_lines(slurp(path));
  REQUIRE(lines.size() >= 2);
  CHECK(static_cast<long long>(lines.size()) - 1 ==
        summary["entries"].get<long long>());
  const json header = json::parse(lines[0]);
  CHECK(header["g"] == 1);
  CHECK(header["n"] == 1);
  CHECK(header["cutoff"] == 5.0);
  CHECK(header["group"] == "modular_torus");
  const json first = json::parse(lines[1]);
  CHECK(first["word"] == "a");
  CHECK(first["length"] == 1.9248473002384139);
  CHECK(first["mult"] == 6);
  double prev = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const json e = json::parse(lines[i]);
    const double len = e["length"].get<double>();
    CHECK(len >= prev);
    CHECK(len <= 5.0);
    prev = len;
  }
}

TEST_CASE("spectrum runs are deterministic byte for byte") {
  const std::string path = scratch_dir() + "/det.jsonl";
  const std::vector<std::string> args = {"spectrum", "--group", "gamma2",
                                         "--L",      "6",       "--max-word",
                                         "8",        "--out",   path};
  const auto r1 = run_cli(args);
  const std::string file1 = slurp(path);
  const auto r2 = run_cli(args);
  const std::string file2 = slurp(path);
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(file1 == file2);
}

TEST_CASE("spectrum without a file streams entries and keeps the summary aside") {
  const auto r = run_cli({"spectrum", "--group", "modular_torus", "--L", "4",
                          "--max-word", "8"});
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() >= 2);
  const json header = json::parse(lines[0]);
  CHECK(header["group"] == "modular_torus");
  const json summary = json::parse(r.err);
  CHECK(summary["entries"].get<long long>() ==
        static_cast<long long>(lines.size()) - 1);
  // The streamed lines parse and round-trip through the library reader.
  const auto sp = cuspdet::io::read_spectrum_string(r.out);
  CHECK(sp.entries.size() == lines.size() - 1);
  CHECK(sp.cutoff == 4.0);
}

TEST_CASE("cache directory reproduces the direct run byte for byte") {
  const std::string cache = scratch_dir() + "/cache";
  const std::string p0 = scratch_dir() + "/nc.jsonl";
  const std::string p1 = scratch_dir() + "/c1.jsonl";
  const std::string p2 = scratch_dir() + "/c2.jsonl";
  auto args = [](const std::string& out) {
    return std::vector<std::string>{"spectrum",   "--group", "modular_torus",
                                    "--L",        "5",       "--max-word",
                                    "9",          "--out",   out};
  };
  REQUIRE(run_cli(args(p0)).exit_code == 0);       // cache off
  REQUIRE(run_cli(args(p1), cache).exit_code == 0);  // cold cache
  REQUIRE(run_cli(args(p2), cache).exit_code == 0);  // warm cache
  CHECK(slurp(p0) == slurp(p1));
  CHECK(slurp(p1) == slurp(p2));
  CHECK(fs::exists(cuspdet::io::cache_path(cache, "modular_torus", 9)));
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

TEST_CASE("zeta values agree with the library on the same file") {
  REQUIRE(!torus_file().empty());
  const auto sp = cuspdet::io::read_spectrum_file(torus_file());

  const auto rv = run_cli({"zeta", "--spectrum", torus_file(), "--s", "2"});
  REQUIRE(rv.exit_code == 0);
  const json v = json::parse(rv.out);
  const auto lib = cuspdet::zeta::log_selberg_zeta(sp, 2.0);
  CHECK(v["mode"] == "log_value");
  CHECK(v["s"] == 2.0);
  CHECK(v["log_value"] == lib.log_value);
  CHECK(v["tail_estimate"] == lib.tail_estimate);
  CHECK(v["k_cut"] == lib.k_cut);

  const auto rd = run_cli(
      {"zeta", "--spectrum", torus_file(), "--s", "2", "--derivative"});
  REQUIRE(rd.exit_code == 0);
  const json d = json::parse(rd.out);
  CHECK(d["mode"] == "log_derivative");
  CHECK(d["log_value"] == cuspdet::zeta::zeta_log_derivative(sp, 2.0).log_value);
  CHECK(d["log_value"].get<double>() > 0.0);
}

TEST_CASE("zeta boundary extrapolation mode") {
  REQUIRE(!torus_file().empty());
  const auto sp = cuspdet::io::read_spectrum_file(torus_file());
  const auto lib = cuspdet::zeta::zeta_prime_at_1(sp, {0.2, 0.1, 0.05, 0.025});

  const auto r = run_cli({"zeta", "--spectrum", torus_file(), "--at-one"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["mode"] == "prime_at_one");
  CHECK(j["s"] == 1.0);
  CHECK(j["value"] == lib.value);
  CHECK(j["abs_error"] == lib.abs_error);
  CHECK(j["tail_estimate"].is_null());
  CHECK(j["k_cut"].is_null());
  if (lib.value > 0.0)
    CHECK(j["log_value"] == std::log(lib.value));
  else
    CHECK(j["log_value"].is_null());
  bool simple_zero = false, low_confidence = false;
  for (const auto& a : j["assumptions"]) {
    const auto s = a.get<std::string>();
    simple_zero = simple_zero || s.find("simple zero") != std::string::npos;
    low_confidence =
        low_confidence || s.find("LOW-CONFIDENCE") != std::string::npos;
  }
  CHECK(simple_zero);
  CHECK(low_confidence);
}

// ---------------------------------------------------------------------------
// det
// ---------------------------------------------------------------------------

TEST_CASE("det subcommand matches the library assembly") {
  REQUIRE(!torus_file().empty());
  const auto sp = cuspdet::io::read_spectrum_file(torus_file());
  const cuspdet::SurfaceType st(1, 1);

  const auto rg = run_cli({"det", "--spectrum", torus_file(), "--s", "2"});
  REQUIRE(rg.exit_code == 0);
  const json g = json::parse(rg.out);
  const auto lib = cuspdet::determinant::det_geometric(st, sp, 2.0);
  CHECK(g["operator"] == "geometric");
  CHECK(g["log_det"] == lib.log_det);
  CHECK(g["det_value"] == *lib.det_value);
  CHECK(g["inputs"]["g"] == 1);
  CHECK(g["inputs"]["n"] == 1);
  CHECK(g["inputs"]["spectrum"].get<std::string>().find("modular_torus") !=
        std::string::npos);
  bool truncated = false;
  for (const auto& a : g["assumptions"])
    truncated = truncated ||
                a.get<std::string>().find("truncated") != std::string::npos;
  CHECK(truncated);

  const auto rb =
      run_cli({"det", "--spectrum", torus_file(), "--s", "2", "--dbar"});
  REQUIRE(rb.exit_code == 0);
  const json b = json::parse(rb.out);
  CHECK(b["operator"] == "dbar");
  CHECK(b["log_det"] == cuspdet::determinant::det_dbar(st, sp, 2.0).log_det);
}

TEST_CASE("det compact mode needs no spectrum") {
  const auto r = run_cli({"det", "--s", "2", "--compact-g", "2"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["operator"] == "compact");
  CHECK(j["log_det"] == 0.35194662442623276);
  CHECK(std::abs(j["det_value"].get<double>() -
                 std::exp(0.35194662442623276)) < 1e-15);
  CHECK(j["inputs"]["g"] == 2);
  CHECK(j["inputs"]["n"] == 0);
  CHECK(j["inputs"]["spectrum"].is_null());
  REQUIRE(j["assumptions"].size() == 1);
  CHECK(j["assumptions"][0] ==
        "compact-surface factor core(s)^(2g-2); no cusp term, no spectrum "
        "input");
  CHECK(run_cli({"det", "--s", "2", "--compact-g", "1"}).exit_code == 2);
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

TEST_CASE("index table for the thrice-punctured sphere") {
  const auto r =
      run_cli({"index", "--g", "0", "--n", "3", "--l-range", "-2,3"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["surface"]["g"] == 0);
  CHECK(j["surface"]["n"] == 3);
  CHECK(j["surface"]["chi"] == -1);
  CHECK(j["l_range"] == json::array({-2, 3}));
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["closed_form_consistent"] == true);
  for (const auto& row : j["rows"]) {
    const int ell = row["ell"].get<int>();
    CHECK(row["index"].get<long long>() ==
          row["ker"].get<long long>() - row["coker"].get<long long>());
    if (ell == 0) {
      CHECK(row["index"] == 1);
      CHECK(row["ker"] == 1);
      CHECK(row["coker"] == 0);
      CHECK(row["eta"] == "-3");
      CHECK(row["divisor_degree"] == 1);
    }
    if (ell == 1) {
      CHECK(row["index"] == -1);
      CHECK(row["ker"] == 0);
      CHECK(row["coker"] == 1);
      CHECK(row["eta"] == "3");
      CHECK(row["divisor_degree"] == 0);
    }
  }
  CHECK(j["heat_coefficients"]["a_m1"] == "1/2");
  CHECK(j["heat_coefficients"]["a_0"] == "-1/6");
  CHECK(j["heat_coefficients"]["a_m1_genus_reading"] == "-1");
  const auto hc = cuspdet::index::heat_coefficients(cuspdet::SurfaceType(0, 3),
                                                    cuspdet::Precision::digits50);
  CHECK(j["heat_coefficients"]["a_mhalf"] == hc.a_mhalf);
  CHECK(j["heat_coefficients"]["a_tilde_mhalf"] == hc.a_tilde_mhalf);
}

TEST_CASE("digits selector is honored and validated") {
  const auto r =
      run_cli({"--digits", "100", "index", "--g", "1", "--n", "1"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["provenance"]["parameters"]["digits"] == "100");
  REQUIRE(j["rows"].size() == 13);  // default range -6..6
}

// ---------------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------------

TEST_CASE("classes reports every identity as equal") {
  const auto r = run_cli({"classes", "--degree", "8"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["all_equal"] == true);
  REQUIRE(j["checks"].size() > 10);
  for (const auto& c : j["checks"]) {
    CHECK(c["equal"] == true);
    CHECK(c.contains("name"));
  }
}

// ---------------------------------------------------------------------------
// provenance determinism across subcommands
// ---------------------------------------------------------------------------

TEST_CASE("identical invocations print identical bytes") {
  REQUIRE(!torus_file().empty());
  const std::vector<std::vector<std::string>> cmds = {
      {"zeta", "--spectrum", torus_file(), "--s", "3"},
      {"det", "--spectrum", torus_file(), "--s", "2", "--dbar"},
      {"index", "--g", "2", "--n", "2"},
      {"classes", "--degree", "6"},
  };
  for (const auto& cmd : cmds) {
    CAPTURE(cmd.front());
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}
