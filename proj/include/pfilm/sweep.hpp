#pragma once

#include <string>
#include <vector>

#include "pfilm/optics.hpp"

namespace pfilm {

enum class SweepAxis { omega, theta, d, eps1, eps2 };

const char* axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);

// One-dimensional uniform sweep. Axis units are external: theta in degrees,
// d in nm, omega and eps dimensionless. The swept field of `stack` (or
// `omega_ratio`) is overridden per grid point.
struct SweepSpec {
  SweepAxis axis = SweepAxis::omega;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  StackConfig stack;
  double omega_ratio = 0.0;
  PlasmaParams plasma;
  SeriesControl series;

  void validate() const;
};

enum class RowFlag { normal, tir, grazing, error_domain, error_convergence };

const char* flag_token(RowFlag f);
RowFlag flag_from_token(const std::string& token);

struct SweepRow {
  double axis_value = 0.0;
  double T = 0.0, R = 0.0, A = 0.0;
  double re_z1 = 0.0, im_z1 = 0.0, re_z2 = 0.0, im_z2 = 0.0;
  int n_odd = 0, n_even = 0;
  RowFlag flag = RowFlag::normal;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::string config_echo;  // resolved configuration (JSON), set by the caller
  std::string version;
  std::string timestamp;    // not part of the CSV payload
};

// axis value i on the inclusive uniform grid; single expression, no drift.
double grid_value(const SweepSpec& spec, int i);

// Evaluates all points; per-point domain errors become flagged rows. Points
// are independent; `threads` > 1 evaluates them concurrently with identical
// results.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

enum class ExtremumKind { maximum, minimum };

struct Extremum {
  int index = 0;
  double axis_value = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
};

// Interior strict local extrema by 3-point comparison; a plateau is reported
// once at its left edge. Needs at least 3 values.
std::vector<Extremum> find_local_extrema(const std::vector<double>& axis,
                                         const std::vector<double>& values);

enum class Column { T, R, A };
std::vector<double> column_values(const SweepResult& result, Column c);
std::vector<double> axis_values(const SweepResult& result);
std::vector<Extremum> find_local_extrema(const SweepResult& result, Column c);

}  // namespace pfilm
