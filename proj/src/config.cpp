#include "pfilm/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "pfilm/constants.hpp"
#include "pfilm/errors.hpp"
#include "pfilm/version.hpp"

namespace pfilm {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
  if (!j.contains(key)) throw config_error(std::string("config: missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw config_error(std::string("config: \"") + key + "\" must be a number");
  return v.get<double>();
}

double optional_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw config_error(std::string("config: \"") + key + "\" must be a number");
  return v.get<double>();
}

std::complex<double> require_eps2(const json& j) {
  if (!j.contains("eps2")) throw config_error("config: missing key \"eps2\"");
  const auto& v = j.at("eps2");
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw config_error("config: \"eps2\" must be a number or [re, im]");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      throw config_error(std::string("config: unknown key \"") + item.key() + "\" in " + where);
  }
}

PlasmaParams parse_plasma(const json& j) {
  PlasmaParams p;
  const bool has_material = j.contains("material");
  const bool has_custom = j.contains("omega_p") || j.contains("v_F");
  if (has_material && has_custom)
    throw config_error("config: specify either \"material\" or omega_p/v_F, not both");
  if (has_material) {
    const auto& m = j.at("material");
    if (!m.is_string()) throw config_error("config: \"material\" must be a string");
    const std::string name = m.get<std::string>();
    if (name != "sodium")
      throw config_error("config: unknown material \"" + name + "\" (built-in: sodium)");
    p = PlasmaParams::sodium();
  } else if (has_custom) {
    p.omega_p = require_number(j, "omega_p");
    p.v_F = require_number(j, "v_F");
  } else {
    throw config_error("config: missing material (or omega_p and v_F)");
  }

  const bool has_ratio = j.contains("nu_over_omega_p");
  const bool has_rads = j.contains("nu_rad_s");
  if (has_ratio && has_rads)
    throw config_error("config: specify either \"nu_over_omega_p\" or \"nu_rad_s\", not both");
  if (has_ratio)
    p.nu = require_number(j, "nu_over_omega_p") * p.omega_p;
  else if (has_rads)
    p.nu = require_number(j, "nu_rad_s");
  else
    p.nu = 0.0;
  p.validate();
  return p;
}

SeriesControl parse_series(const json& j) {
  SeriesControl s;
  if (!j.contains("series")) return s;
  const auto& v = j.at("series");
  if (!v.is_object()) throw config_error("config: \"series\" must be an object");
  reject_unknown(v, {"rel_tol", "n_max", "consecutive_below"}, "series");
  s.rel_tol = optional_number(v, "rel_tol", s.rel_tol);
  s.n_max = static_cast<int>(optional_number(v, "n_max", s.n_max));
  s.consecutive_below =
      static_cast<int>(optional_number(v, "consecutive_below", s.consecutive_below));
  s.validate();
  return s;
}

double parse_theta_deg(const json& j) {
  const double deg = require_number(j, "theta_deg");
  if (!(deg >= 0.0 && deg < 90.0))
    throw config_error("config: \"theta_deg\" must lie in [0, 90); got " +
                       std::to_string(deg));
  return deg;
}

json echo_json(const RunConfig& cfg, const json& src) {
  json e;
  e["mode"] = cfg.mode == RunConfig::Mode::point ? "point" : "sweep";
  e["tool_version"] = version_string;
  e["omega_p"] = cfg.plasma.omega_p;
  e["v_F"] = cfg.plasma.v_F;
  e["nu_over_omega_p"] = cfg.plasma.collision_ratio();
  if (src.contains("material")) e["material"] = src.at("material");
  e["eps1"] = cfg.stack.eps1;
  if (cfg.stack.eps2.imag() == 0.0)
    e["eps2"] = cfg.stack.eps2.real();
  else
    e["eps2"] = {cfg.stack.eps2.real(), cfg.stack.eps2.imag()};
  e["d_nm"] = cfg.stack.d_nm;
  e["theta_deg"] = rad2deg(cfg.stack.theta);
  e["series"] = {{"rel_tol", cfg.series.rel_tol},
                 {"n_max", cfg.series.n_max},
                 {"consecutive_below", cfg.series.consecutive_below}};
  if (cfg.mode == RunConfig::Mode::point) {
    e["omega_over_omega_p"] = cfg.omega_ratio;
  } else {
    e["axis"] = axis_name(cfg.sweep.axis);
    e["start"] = cfg.sweep.start;
    e["stop"] = cfg.sweep.stop;
    e["count"] = cfg.sweep.count;
    if (cfg.sweep.axis != SweepAxis::omega) e["omega_over_omega_p"] = cfg.omega_ratio;
  }
  return e;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text, RunConfig::Mode expected) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config: top level must be a JSON object");

  reject_unknown(j,
                 {"material", "omega_p", "v_F", "nu_over_omega_p", "nu_rad_s", "eps1",
                  "eps2", "d_nm", "theta_deg", "omega_over_omega_p", "axis", "start",
                  "stop", "count", "series"},
                 "config");

  RunConfig cfg;
  cfg.mode = expected;
  cfg.plasma = parse_plasma(j);
  cfg.series = parse_series(j);

  const bool has_axis = j.contains("axis") || j.contains("start") || j.contains("stop") ||
                        j.contains("count");
  if (expected == RunConfig::Mode::point && has_axis)
    throw config_error("config: axis/start/stop/count are sweep-mode keys");
  if (expected == RunConfig::Mode::sweep &&
      !(j.contains("axis") && j.contains("start") && j.contains("stop") && j.contains("count")))
    throw config_error("config: sweep mode requires axis, start, stop and count");

  SweepAxis axis = SweepAxis::omega;
  if (expected == RunConfig::Mode::sweep) {
    if (!j.at("axis").is_string()) throw config_error("config: \"axis\" must be a string");
    axis = axis_from_name(j.at("axis").get<std::string>());
  }

  const bool sweep_mode = expected == RunConfig::Mode::sweep;
  const auto forbid_swept = [&](const char* key, SweepAxis a) {
    if (sweep_mode && axis == a && j.contains(key))
      throw config_error(std::string("config: \"") + key +
                         "\" must not be set when it is the sweep axis");
  };
  forbid_swept("d_nm", SweepAxis::d);
  forbid_swept("theta_deg", SweepAxis::theta);
  forbid_swept("eps1", SweepAxis::eps1);
  forbid_swept("eps2", SweepAxis::eps2);
  forbid_swept("omega_over_omega_p", SweepAxis::omega);

  // Swept fields receive placeholders here; run_sweep overrides them per point.
  cfg.stack.d_nm = (sweep_mode && axis == SweepAxis::d) ? 1.0 : require_number(j, "d_nm");
  if (!(cfg.stack.d_nm > 0.0)) throw config_error("config: \"d_nm\" must be positive");
  cfg.stack.eps1 = (sweep_mode && axis == SweepAxis::eps1) ? 1.0 : require_number(j, "eps1");
  if (!(cfg.stack.eps1 > 0.0)) throw config_error("config: \"eps1\" must be positive");
  cfg.stack.eps2 = (sweep_mode && axis == SweepAxis::eps2) ? std::complex<double>(1.0, 0.0)
                                                           : require_eps2(j);
  cfg.stack.theta =
      (sweep_mode && axis == SweepAxis::theta) ? 0.0 : deg2rad(parse_theta_deg(j));

  if (sweep_mode && axis == SweepAxis::omega) {
    cfg.omega_ratio = 0.0;
  } else {
    cfg.omega_ratio = require_number(j, "omega_over_omega_p");
    if (!(cfg.omega_ratio > 0.0))
      throw config_error("config: \"omega_over_omega_p\" must be positive");
  }

  if (sweep_mode) {
    cfg.sweep.axis = axis;
    cfg.sweep.start = require_number(j, "start");
    cfg.sweep.stop = require_number(j, "stop");
    const double count = require_number(j, "count");
    if (count != static_cast<int>(count))
      throw config_error("config: \"count\" must be an integer");
    cfg.sweep.count = static_cast<int>(count);
    cfg.sweep.stack = cfg.stack;
    cfg.sweep.omega_ratio = cfg.omega_ratio;
    cfg.sweep.plasma = cfg.plasma;
    cfg.sweep.series = cfg.series;
    cfg.sweep.validate();
  } else {
    cfg.stack.validate();
  }

  cfg.echo = echo_json(cfg, j).dump(2);
  return cfg;
}

RunConfig load_run_config(const std::string& path, RunConfig::Mode expected) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str(), expected);
}

}  // namespace pfilm
