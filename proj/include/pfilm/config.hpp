#pragma once

#include <string>

#include "pfilm/sweep.hpp"

namespace pfilm {

// External-unit run configuration (JSON): angles in degrees, thickness in nm,
// collision frequency as nu/omega_p or rad/s, frequency as omega/omega_p.
struct RunConfig {
  enum class Mode { point, sweep };

  Mode mode = Mode::point;
  PlasmaParams plasma;
  StackConfig stack;        // theta converted to radians at ingestion
  double omega_ratio = 0.0; // point frequency, or the fixed one for sweeps
  SeriesControl series;
  SweepSpec sweep;          // filled in sweep mode
  std::string echo;         // resolved configuration as JSON text
};

// Throws config_error naming the offending field. Unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text, RunConfig::Mode expected);
RunConfig load_run_config(const std::string& path, RunConfig::Mode expected);

}  // namespace pfilm
