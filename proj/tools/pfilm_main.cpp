// pfilm: transmittance/reflectance/absorptance of a thin metal film between
// two dielectric half-spaces for obliquely incident P-polarized light.
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pfilm/config.hpp"
#include "pfilm/constants.hpp"
#include "pfilm/csv.hpp"
#include "pfilm/errors.hpp"
#include "pfilm/optics.hpp"
#include "pfilm/validation.hpp"
#include "pfilm/version.hpp"

namespace {

using nlohmann::json;
using namespace pfilm;

constexpr int exit_ok = 0;
constexpr int exit_validation_failed = 1;
constexpr int exit_config_error = 2;
constexpr int exit_numerical_error = 3;

const char* flag_name(PointFlag f) {
  switch (f) {
    case PointFlag::normal: return "normal";
    case PointFlag::total_internal_reflection: return "total_internal_reflection";
    case PointFlag::grazing: return "grazing";
  }
  return "?";
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

int cmd_point(const std::string& config_path, bool as_json, bool check_free_standing) {
  const RunConfig cfg = load_run_config(config_path, RunConfig::Mode::point);
  if (check_free_standing && !(cfg.stack.eps1 == 1.0 && cfg.stack.eps2 == 1.0))
    throw config_error("--check-free-standing requires eps1 = eps2 = 1");

  const PointResult r = evaluate_point(cfg.stack, cfg.omega_ratio, cfg.plasma, cfg.series);

  if (as_json) {
    json out;
    out["config"] = json::parse(cfg.echo);
    out["Z1"] = complex_json(r.Z1);
    out["Z2"] = complex_json(r.Z2);
    out["p1"] = complex_json(r.p1);
    out["p2"] = complex_json(r.p2);
    out["T"] = r.T;
    out["R"] = r.R;
    out["A"] = r.A;
    out["flag"] = flag_name(r.flag);
    out["n_used_odd"] = r.n_used_odd;
    out["n_used_even"] = r.n_used_even;
    out["tail_estimate"] = r.tail_estimate;
    if (check_free_standing) {
      out["free_standing_T"] = 0.25 * std::norm(r.p1 - r.p2);
      out["free_standing_R"] = 0.25 * std::norm(r.p1 + r.p2);
    }
    std::cout << out.dump(2) << "\n";
    return exit_ok;
  }

  std::printf("pfilm %s\n", version_string);
  std::printf("omega/omega_p = %.17g, theta = %.17g deg, d = %.17g nm\n", cfg.omega_ratio,
              rad2deg(cfg.stack.theta), cfg.stack.d_nm);
  std::printf("eps1 = %.17g, eps2 = (%.17g, %.17g)\n", cfg.stack.eps1,
              cfg.stack.eps2.real(), cfg.stack.eps2.imag());
  std::printf("Z1 = (%.17g, %.17g)   [odd harmonics: %d]\n", r.Z1.real(), r.Z1.imag(),
              r.n_used_odd);
  std::printf("Z2 = (%.17g, %.17g)   [even harmonics: %d]\n", r.Z2.real(), r.Z2.imag(),
              r.n_used_even);
  std::printf("p1 = (%.17g, %.17g)\n", r.p1.real(), r.p1.imag());
  std::printf("p2 = (%.17g, %.17g)\n", r.p2.real(), r.p2.imag());
  std::printf("T = %.17g\nR = %.17g\nA = %.17g\n", r.T, r.R, r.A);
  std::printf("flag = %s, series tail estimate = %.3g\n", flag_name(r.flag), r.tail_estimate);
  if (check_free_standing) {
    const double t_film = 0.25 * std::norm(r.p1 - r.p2);
    const double r_film = 0.25 * std::norm(r.p1 + r.p2);
    std::printf("free-standing check: |p1-p2|^2/4 = %.17g (T), |p1+p2|^2/4 = %.17g (R)\n",
                t_film, r_film);
  }
  return exit_ok;
}

void write_plot_script(const std::string& csv_path, const std::string& script_path,
                       const SweepSpec& spec) {
  std::ofstream os(script_path);
  if (!os) throw config_error("cannot write plot script \"" + script_path + "\"");
  const char* xlabel = "axis";
  switch (spec.axis) {
    case SweepAxis::omega: xlabel = "omega / omega_p"; break;
    case SweepAxis::theta: xlabel = "incidence angle (deg)"; break;
    case SweepAxis::d: xlabel = "film thickness (nm)"; break;
    case SweepAxis::eps1: xlabel = "eps1"; break;
    case SweepAxis::eps2: xlabel = "eps2"; break;
  }
  os << "#!/usr/bin/env python3\n"
     << "# generated by pfilm " << version_string << "; plots T/R/A from the CSV next to it\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "path = " << json(csv_path).dump() << "\n"
     << "rows = [r for r in csv.DictReader(open(path)) if not r[\"flag\"].startswith(\"error\")]\n"
     << "x = [float(r[\"axis\"]) for r in rows]\n"
     << "fig, ax = plt.subplots(figsize=(8, 5))\n"
     << "for col in (\"T\", \"R\", \"A\"):\n"
     << "    ax.plot(x, [float(r[col]) for r in rows], label=col)\n"
     << "ax.set_xlabel(" << json(xlabel).dump() << ")\n"
     << "ax.set_ylabel(\"energy coefficient\")\n"
     << "ax.legend()\n"
     << "ax.grid(True, alpha=0.3)\n"
     << "fig.tight_layout()\n"
     << "fig.savefig(path + \".png\", dpi=150)\n"
     << "print(\"wrote\", path + \".png\")\n";
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, bool plot_script,
              int threads, bool as_json) {
  const RunConfig cfg = load_run_config(config_path, RunConfig::Mode::sweep);
  const SweepResult result = run_sweep(cfg.sweep, threads);

  {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw config_error("cannot write output file \"" + out_path + "\"");
    write_csv(os, result.rows);
  }
  {
    json meta;
    meta["config"] = json::parse(cfg.echo);
    meta["tool_version"] = result.version;
    meta["timestamp"] = result.timestamp;
    meta["rows"] = result.rows.size();
    meta["csv"] = out_path;
    std::ofstream os(out_path + ".meta.json", std::ios::binary);
    if (!os) throw config_error("cannot write \"" + out_path + ".meta.json\"");
    os << meta.dump(2) << "\n";
  }
  if (plot_script) write_plot_script(out_path, out_path + ".plot.py", cfg.sweep);

  json summary;
  summary["csv"] = out_path;
  summary["rows"] = result.rows.size();
  int errors = 0;
  for (const auto& r : result.rows)
    if (r.flag == RowFlag::error_domain || r.flag == RowFlag::error_convergence) ++errors;
  summary["error_rows"] = errors;
  const char* names[] = {"T", "R", "A"};
  const Column cols[] = {Column::T, Column::R, Column::A};
  for (int i = 0; i < 3; ++i) {
    const auto values = column_values(result, cols[i]);
    double lo = values[0], hi = values[0];
    for (double v : values) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    const auto extrema = find_local_extrema(result, cols[i]);
    int maxima = 0, minima = 0;
    for (const auto& e : extrema)
      (e.kind == ExtremumKind::maximum ? maxima : minima) += 1;
    summary[names[i]] = {{"min", lo},
                         {"max", hi},
                         {"local_maxima", maxima},
                         {"local_minima", minima}};
  }
  if (as_json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::printf("wrote %s (%zu rows, %d error rows)\n", out_path.c_str(),
                result.rows.size(), errors);
    for (int i = 0; i < 3; ++i) {
      const auto& s = summary[names[i]];
      std::printf("%s: min %.6g, max %.6g, %d local maxima, %d local minima\n", names[i],
                  s["min"].get<double>(), s["max"].get<double>(),
                  s["local_maxima"].get<int>(), s["local_minima"].get<int>());
    }
    if (plot_script) std::printf("plot script: %s.plot.py\n", out_path.c_str());
  }
  return exit_ok;
}

int cmd_validate(const std::string& config_path, bool quick) {
  ValidationOptions opts;
  if (!config_path.empty()) {
    // Only the series block matters here; accept either mode's config.
    RunConfig cfg;
    try {
      cfg = load_run_config(config_path, RunConfig::Mode::point);
    } catch (const config_error&) {
      cfg = load_run_config(config_path, RunConfig::Mode::sweep);
    }
    opts.series = cfg.series;
  }
  opts.oracle_terms = quick ? 100000 : 1000000;

  const ValidationReport rep = run_validation(opts);
  for (const auto& c : rep.checks) {
    std::printf("[%s] %-32s observed = %-12.4g tolerance = %-10.3g %s\n",
                c.pass ? " OK " : "FAIL", c.name.c_str(), c.observed, c.tolerance,
                c.note.c_str());
  }
  for (const auto& line : rep.info) std::printf("[info] %s\n", line.c_str());
  const bool ok = rep.all_pass();
  std::printf("%s\n", ok ? "validation: all checks passed" : "validation: FAILURES present");
  return ok ? exit_ok : exit_validation_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thin-film P-wave transmission/reflection/absorption calculator"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  std::string config_path, out_path;
  bool as_json = false, plot_script = false, check_free_standing = false, quick = false;
  int threads = 1;

  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  point->add_option("--config", config_path, "JSON configuration file")->required();
  point->add_flag("--json", as_json, "machine-readable output");
  point->add_flag("--check-free-standing", check_free_standing,
                  "also print the free-standing-film formulas (needs eps1 = eps2 = 1)");

  auto* sweep = app.add_subcommand("sweep", "run a one-dimensional parameter sweep");
  sweep->add_option("--config", config_path, "JSON configuration file")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_flag("--json", as_json, "machine-readable summary");
  sweep->add_flag("--plot-script", plot_script, "emit a python plot script next to the CSV");
  sweep->add_option("--threads", threads, "worker threads for the sweep")
      ->check(CLI::Range(1, 256));

  auto* validate = app.add_subcommand("validate", "run the built-in validation suite");
  validate->add_option("--config", config_path, "JSON configuration (series overrides)");
  validate->add_flag("--quick", quick, "use a smaller reference summation cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config_error;
  }

  try {
    if (point->parsed()) return cmd_point(config_path, as_json, check_free_standing);
    if (sweep->parsed()) return cmd_sweep(config_path, out_path, plot_script, threads, as_json);
    return cmd_validate(config_path, quick);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const domain_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return exit_numerical_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical_error;
  }
}
