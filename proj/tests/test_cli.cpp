// End-to-end checks of the command-line interface: exit codes, file formats.
// Needs the binary path in the PFILM_CLI environment variable (set by ctest).
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pfilm/csv.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("PFILM_CLI");
  return p ? p : "";
}

struct RunOutcome {
  int exit_code = -1;
  std::string stdout_text;
};

RunOutcome run(const std::string& args) {
  const std::string out = "/tmp/pfilm_cli_test_out.txt";
  const std::string cmd = cli_path() + " " + args + " > " + out + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunOutcome o;
  o.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  o.stdout_text = buf.str();
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  os << text;
}

const char* tir_point = R"({
  "material": "sodium", "nu_over_omega_p": 0.001,
  "eps1": 4.0, "eps2": 1.0, "d_nm": 10.0, "theta_deg": 45.0,
  "omega_over_omega_p": 1.0
})";

}  // namespace

TEST_CASE("cli: point, sweep, exit codes") {
  if (cli_path().empty()) {
    MESSAGE("PFILM_CLI not set; skipping CLI end-to-end checks");
    return;
  }

  SUBCASE("help and version") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--version").stdout_text.find("0.1.0") != std::string::npos);
    CHECK(run("bogus-subcommand").exit_code == 2);
  }

  SUBCASE("point: TIR flag in human and json output") {
    write_file("/tmp/pfilm_tir.json", tir_point);
    const RunOutcome human = run("point --config /tmp/pfilm_tir.json");
    CHECK(human.exit_code == 0);
    CHECK(human.stdout_text.find("total_internal_reflection") != std::string::npos);
    CHECK(human.stdout_text.find("T = 0\n") != std::string::npos);

    const RunOutcome js = run("point --config /tmp/pfilm_tir.json --json");
    CHECK(js.exit_code == 0);
    const auto parsed = nlohmann::json::parse(js.stdout_text);
    CHECK(parsed["T"].get<double>() == 0.0);
    CHECK(parsed["flag"] == "total_internal_reflection");
    CHECK(parsed["config"]["eps1"] == 4.0);
  }

  SUBCASE("free-standing check flag") {
    write_file("/tmp/pfilm_fs.json", R"({
      "material": "sodium", "nu_over_omega_p": 0.001,
      "eps1": 1.0, "eps2": 1.0, "d_nm": 5.0, "theta_deg": 40.0,
      "omega_over_omega_p": 0.8
    })");
    const RunOutcome js = run("point --config /tmp/pfilm_fs.json --json --check-free-standing");
    CHECK(js.exit_code == 0);
    const auto parsed = nlohmann::json::parse(js.stdout_text);
    const double t = parsed["T"].get<double>();
    const double tf = parsed["free_standing_T"].get<double>();
    CHECK(std::abs(t - tf) <= 1e-12 * std::max(t, tf));
    // the flag demands a free-standing stack
    CHECK(run("point --config /tmp/pfilm_tir.json --check-free-standing").exit_code == 2);
  }

  SUBCASE("config errors exit 2 and name the field") {
    write_file("/tmp/pfilm_bad.json", R"({
      "material": "sodium", "eps1": 4.0, "eps2": 1.0, "d_nm": 10.0,
      "theta_deg": 95.0, "omega_over_omega_p": 1.0
    })");
    const RunOutcome r = run("point --config /tmp/pfilm_bad.json");
    CHECK(r.exit_code == 2);
    CHECK(r.stdout_text.find("theta_deg") != std::string::npos);
    CHECK(run("point --config /tmp/does_not_exist.json").exit_code == 2);
  }

  SUBCASE("numerical failures exit 3") {
    write_file("/tmp/pfilm_nconv.json", R"({
      "material": "sodium", "nu_over_omega_p": 0.001,
      "eps1": 4.0, "eps2": 1.0, "d_nm": 10.0, "theta_deg": 20.0,
      "omega_over_omega_p": 0.9,
      "series": {"rel_tol": 1e-14, "n_max": 8}
    })");
    const RunOutcome r = run("point --config /tmp/pfilm_nconv.json");
    CHECK(r.exit_code == 3);
    CHECK(r.stdout_text.find("numerical error") != std::string::npos);
  }

  SUBCASE("sweep writes csv, metadata and plot script; threads agree byte-for-byte") {
    write_file("/tmp/pfilm_sweep.json", R"({
      "material": "sodium", "nu_over_omega_p": 0.001,
      "eps1": 1.0, "eps2": 4.0, "d_nm": 1.0, "theta_deg": 75.0,
      "axis": "Omega", "start": 0.2, "stop": 1.2, "count": 21
    })");
    const RunOutcome one =
        run("sweep --config /tmp/pfilm_sweep.json --out /tmp/pfilm_a.csv --plot-script");
    CHECK(one.exit_code == 0);
    const RunOutcome four =
        run("sweep --config /tmp/pfilm_sweep.json --out /tmp/pfilm_b.csv --threads 4");
    CHECK(four.exit_code == 0);

    std::ifstream fa("/tmp/pfilm_a.csv"), fb("/tmp/pfilm_b.csv");
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());

    std::istringstream parse_in(sa.str());
    const auto rows = pfilm::read_csv(parse_in);
    CHECK(rows.size() == 21);

    std::ifstream meta("/tmp/pfilm_a.csv.meta.json");
    CHECK(meta.good());
    nlohmann::json m;
    meta >> m;
    CHECK(m["rows"] == 21);
    CHECK(m["config"]["axis"] == "Omega");

    std::ifstream script("/tmp/pfilm_a.csv.plot.py");
    CHECK(script.good());
  }

  SUBCASE("two-row sweep") {
    write_file("/tmp/pfilm_sw2.json", R"({
      "material": "sodium", "nu_over_omega_p": 0.001,
      "eps1": 4.0, "eps2": 1.0, "d_nm": 10.0, "omega_over_omega_p": 1.0,
      "axis": "theta", "start": 10.0, "stop": 60.0, "count": 2
    })");
    const RunOutcome r = run("sweep --config /tmp/pfilm_sw2.json --out /tmp/pfilm_sw2.csv");
    CHECK(r.exit_code == 0);
    std::ifstream f("/tmp/pfilm_sw2.csv");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    int lines = 0;
    for (char c : text)
      if (c == '\n') ++lines;
    CHECK(lines == 3);  // header + 2 rows
  }

  SUBCASE("validate fails loudly with a sloppy tolerance") {
    write_file("/tmp/pfilm_sloppy.json", R"({
      "material": "sodium", "nu_over_omega_p": 0.001,
      "eps1": 4.0, "eps2": 1.0, "d_nm": 10.0, "theta_deg": 20.0,
      "omega_over_omega_p": 1.0,
      "series": {"rel_tol": 1e-2}
    })");
    const RunOutcome r = run("validate --quick --config /tmp/pfilm_sloppy.json");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("FAIL") != std::string::npos);
  }
}
