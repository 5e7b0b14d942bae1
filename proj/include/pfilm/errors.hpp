#pragma once

#include <stdexcept>

namespace pfilm {

// Numerical domain violations: singular parameter configurations, poles,
// non-finite intermediates.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user-facing configuration: bad ranges, units, unknown keys.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Harmonic series hit n_max before meeting the tolerance; the message carries
// the partial value and tail estimate.
struct convergence_error : domain_error {
  using domain_error::domain_error;
};

}  // namespace pfilm
