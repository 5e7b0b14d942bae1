#include "pfilm/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "pfilm/constants.hpp"
#include "pfilm/errors.hpp"
#include "pfilm/version.hpp"

namespace pfilm {

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::omega: return "Omega";
    case SweepAxis::theta: return "theta";
    case SweepAxis::d: return "d";
    case SweepAxis::eps1: return "eps1";
    case SweepAxis::eps2: return "eps2";
  }
  return "?";
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "Omega") return SweepAxis::omega;
  if (name == "theta") return SweepAxis::theta;
  if (name == "d") return SweepAxis::d;
  if (name == "eps1") return SweepAxis::eps1;
  if (name == "eps2") return SweepAxis::eps2;
  throw config_error("axis: expected one of Omega, theta, d, eps1, eps2; got \"" + name + "\"");
}

const char* flag_token(RowFlag f) {
  switch (f) {
    case RowFlag::normal: return "normal";
    case RowFlag::tir: return "tir";
    case RowFlag::grazing: return "grazing";
    case RowFlag::error_domain: return "error_domain";
    case RowFlag::error_convergence: return "error_convergence";
  }
  return "?";
}

RowFlag flag_from_token(const std::string& token) {
  if (token == "normal") return RowFlag::normal;
  if (token == "tir") return RowFlag::tir;
  if (token == "grazing") return RowFlag::grazing;
  if (token == "error_domain") return RowFlag::error_domain;
  if (token == "error_convergence") return RowFlag::error_convergence;
  throw config_error("flag: unknown token \"" + token + "\"");
}

void SweepSpec::validate() const {
  if (count < 2) throw config_error("sweep: count must be at least 2");
  if (!(start < stop)) throw config_error("sweep: start must be below stop");
  plasma.validate();
  series.validate();
  switch (axis) {
    case SweepAxis::omega:
      if (!(start > 0.0)) throw config_error("sweep: Omega axis must start above 0");
      break;
    case SweepAxis::theta:
      if (!(start >= 0.0 && stop < 90.0))
        throw config_error("sweep: theta axis must lie in [0, 90) degrees");
      break;
    case SweepAxis::d:
      if (!(start > 0.0)) throw config_error("sweep: d axis must start above 0");
      break;
    case SweepAxis::eps1:
      if (!(start > 0.0)) throw config_error("sweep: eps1 axis must start above 0");
      break;
    case SweepAxis::eps2:
      break;
  }
  if (axis != SweepAxis::omega && !(omega_ratio > 0.0))
    throw config_error("sweep: omega_over_omega_p must be positive");
  // The fixed parts of the stack must be valid. Swept fields are overridden
  // per point, so give them a placeholder that passes validation.
  StackConfig base = stack;
  if (axis == SweepAxis::d) base.d_nm = start;
  if (axis == SweepAxis::eps1) base.eps1 = start;
  if (axis == SweepAxis::eps2) base.eps2 = {stop, 0.0};
  if (axis == SweepAxis::theta) base.theta = deg2rad(start);
  base.validate();
}

double grid_value(const SweepSpec& spec, int i) {
  return spec.start + static_cast<double>(i) * (spec.stop - spec.start) /
                          static_cast<double>(spec.count - 1);
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, int i) {
  const double x = grid_value(spec, i);
  StackConfig cfg = spec.stack;
  double omega = spec.omega_ratio;
  switch (spec.axis) {
    case SweepAxis::omega: omega = x; break;
    case SweepAxis::theta: cfg.theta = deg2rad(x); break;
    case SweepAxis::d: cfg.d_nm = x; break;
    case SweepAxis::eps1: cfg.eps1 = x; break;
    case SweepAxis::eps2: cfg.eps2 = {x, 0.0}; break;
  }
  SweepRow row;
  row.axis_value = x;
  try {
    const PointResult p = evaluate_point(cfg, omega, spec.plasma, spec.series);
    row.T = p.T;
    row.R = p.R;
    row.A = p.A;
    row.re_z1 = p.Z1.real();
    row.im_z1 = p.Z1.imag();
    row.re_z2 = p.Z2.real();
    row.im_z2 = p.Z2.imag();
    row.n_odd = p.n_used_odd;
    row.n_even = p.n_used_even;
    switch (p.flag) {
      case PointFlag::normal: row.flag = RowFlag::normal; break;
      case PointFlag::total_internal_reflection: row.flag = RowFlag::tir; break;
      case PointFlag::grazing: row.flag = RowFlag::grazing; break;
    }
  } catch (const convergence_error&) {
    row.T = row.R = row.A = std::numeric_limits<double>::quiet_NaN();
    row.re_z1 = row.im_z1 = row.re_z2 = row.im_z2 = std::numeric_limits<double>::quiet_NaN();
    row.flag = RowFlag::error_convergence;
  } catch (const domain_error&) {
    row.T = row.R = row.A = std::numeric_limits<double>::quiet_NaN();
    row.re_z1 = row.im_z1 = row.re_z2 = row.im_z2 = std::numeric_limits<double>::quiet_NaN();
    row.flag = RowFlag::error_domain;
  }
  return row;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  SweepResult result;
  result.spec = spec;
  result.rows.resize(static_cast<size_t>(spec.count));
  result.version = version_string;
  result.timestamp = iso_timestamp();

  const int workers = std::max(1, std::min(threads, spec.count));
  if (workers == 1) {
    for (int i = 0; i < spec.count; ++i)
      result.rows[static_cast<size_t>(i)] = evaluate_row(spec, i);
    return result;
  }

  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= spec.count) break;
      result.rows[static_cast<size_t>(i)] = evaluate_row(spec, i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return result;
}

std::vector<Extremum> find_local_extrema(const std::vector<double>& axis,
                                         const std::vector<double>& values) {
  if (values.size() != axis.size())
    throw domain_error("find_local_extrema: axis/value size mismatch");
  if (values.size() < 3)
    throw domain_error("find_local_extrema: need at least 3 samples");
  std::vector<Extremum> out;
  const size_t n = values.size();
  size_t i = 1;
  while (i + 1 < n) {
    size_t j = i;
    while (j + 1 < n && values[j + 1] == values[i]) ++j;  // plateau [i..j]
    if (j + 1 < n) {
      if (values[i] > values[i - 1] && values[j] > values[j + 1])
        out.push_back({static_cast<int>(i), axis[i], values[i], ExtremumKind::maximum});
      else if (values[i] < values[i - 1] && values[j] < values[j + 1])
        out.push_back({static_cast<int>(i), axis[i], values[i], ExtremumKind::minimum});
    }
    i = j + 1;
  }
  return out;
}

std::vector<double> column_values(const SweepResult& result, Column c) {
  std::vector<double> v;
  v.reserve(result.rows.size());
  for (const auto& r : result.rows)
    v.push_back(c == Column::T ? r.T : (c == Column::R ? r.R : r.A));
  return v;
}

std::vector<double> axis_values(const SweepResult& result) {
  std::vector<double> v;
  v.reserve(result.rows.size());
  for (const auto& r : result.rows) v.push_back(r.axis_value);
  return v;
}

std::vector<Extremum> find_local_extrema(const SweepResult& result, Column c) {
  return find_local_extrema(axis_values(result), column_values(result, c));
}

}  // namespace pfilm
