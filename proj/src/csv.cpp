#include "pfilm/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

#include "pfilm/errors.hpp"

namespace pfilm {

namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

double parse_double(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw config_error("csv: bad numeric field \"" + field + "\" on line " +
                       std::to_string(line_no));
  return v;
}

int parse_int(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw config_error("csv: bad integer field \"" + field + "\" on line " +
                       std::to_string(line_no));
  return static_cast<int>(v);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::string out;
  out.reserve(rows.size() * 160 + 64);
  out += csv_header;
  out += '\n';
  for (const auto& r : rows) {
    append_double(out, r.axis_value);
    out += ',';
    append_double(out, r.T);
    out += ',';
    append_double(out, r.R);
    out += ',';
    append_double(out, r.A);
    out += ',';
    append_double(out, r.re_z1);
    out += ',';
    append_double(out, r.im_z1);
    out += ',';
    append_double(out, r.re_z2);
    out += ',';
    append_double(out, r.im_z2);
    out += ',';
    out += std::to_string(r.n_odd);
    out += ',';
    out += std::to_string(r.n_even);
    out += ',';
    out += flag_token(r.flag);
    out += '\n';
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << csv_string(rows);
}

std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw config_error("csv: empty input");
  if (!line.empty() && line.back() == '\r')
    throw config_error("csv: CRLF line endings are not produced by this tool");
  if (line != csv_header)
    throw config_error("csv: unexpected header \"" + line + "\"");

  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 11)
      throw config_error("csv: expected 11 fields on line " + std::to_string(line_no));
    SweepRow r;
    r.axis_value = parse_double(f[0], line_no);
    r.T = parse_double(f[1], line_no);
    r.R = parse_double(f[2], line_no);
    r.A = parse_double(f[3], line_no);
    r.re_z1 = parse_double(f[4], line_no);
    r.im_z1 = parse_double(f[5], line_no);
    r.re_z2 = parse_double(f[6], line_no);
    r.im_z2 = parse_double(f[7], line_no);
    r.n_odd = parse_int(f[8], line_no);
    r.n_even = parse_int(f[9], line_no);
    r.flag = flag_from_token(f[10]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace pfilm
