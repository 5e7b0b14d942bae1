#include "doctest.h"
#include "pfilm/validation.hpp"

using namespace pfilm;

TEST_CASE("reference grid passes every check") {
  ValidationOptions opts;
  opts.oracle_terms = 150000;  // smaller cutoff keeps the unit run fast
  const ValidationReport rep = run_validation(opts);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": observed ", c.observed, " tolerance ", c.tolerance);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
  // the transformed-sum comparison is reported, never asserted
  CHECK(rep.info.size() == figure_cases().size());
  for (const auto& line : rep.info)
    CHECK(line.find("transformed-sum discrepancy") != std::string::npos);
}

TEST_CASE("a sloppy tolerance fails loudly") {
  ValidationOptions opts;
  opts.series.rel_tol = 1e-2;
  opts.oracle_terms = 100000;
  const ValidationReport rep = run_validation(opts);
  CHECK_FALSE(rep.all_pass());
  bool agreement_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "impedance-oracle-agreement" && !c.pass) agreement_failed = true;
  CHECK(agreement_failed);
}
