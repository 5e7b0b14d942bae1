#pragma once

#include <string>
#include <vector>

#include "pfilm/sweep.hpp"

namespace pfilm {

// One named sweep configuration exercised by the validation and acceptance
// suites (the reference curves the tool reproduces).
struct FigureCase {
  std::string name;
  SweepSpec spec;
};

// The six reference configurations: three air-film-glass spectra (d = 1, 2,
// 5 nm at 75 deg), a glass-film-air angle scan, the mica-film-air d = 100 nm
// spectrum and the mica-film-air resonance comb.
std::vector<FigureCase> figure_cases();

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;  // what is compared against the tolerance
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> info;  // reported-only lines (no pass/fail)

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct ValidationOptions {
  SeriesControl series;
  long oracle_terms = 1000000;  // brute-force harmonic cutoff
};

// Oracle-vs-production agreement plus the module invariants, on a small
// reference grid. Deterministic.
ValidationReport run_validation(const ValidationOptions& opts = {});

}  // namespace pfilm
