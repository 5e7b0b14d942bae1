#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfilm/sweep.hpp"

namespace pfilm {

inline constexpr const char* csv_header =
    "axis,T,R,A,ReZ1,ImZ1,ReZ2,ImZ2,n_odd,n_even,flag";

// UTF-8, LF line endings, '.' decimal separator, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string csv_string(const std::vector<SweepRow>& rows);

// Parses a file produced by write_csv; throws config_error on malformed input.
std::vector<SweepRow> read_csv(std::istream& is);

}  // namespace pfilm
