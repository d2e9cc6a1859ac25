#include "fracporo/analysis/error_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::optional<double> parse_percent(const std::string& s) {
  if (s == "nan") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "' in error table");
  }
  if (used != s.size()) throw ParseError("bad number '" + s + "' in error table");
  return v;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in error table");
  }
  if (used != s.size()) throw ParseError("bad integer '" + s + "' in error table");
  return v;
}

}  // namespace

std::string format_percent(const std::optional<double>& value) {
  if (!value || !std::isfinite(*value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", *value);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

void write_error_table(const ErrorTable& table, std::ostream& out) {
  const std::size_t np = table.rows.empty() ? 1 : table.rows.front().pressures.size();
  out << "M,DOF_H,eL2_u,eH1_u";
  for (std::size_t i = 1; i <= np; ++i) out << ",eL2_p" << i << ",eH1_p" << i;
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.pressures.size() != np) throw ContractError("error rows report different pressure counts");
    out << row.basis_per_vertex << ',' << row.coarse_dofs << ',' << format_percent(row.displacement.l2) << ','
        << format_percent(row.displacement.energy);
    for (const auto& p : row.pressures) out << ',' << format_percent(p.l2) << ',' << format_percent(p.energy);
    out << '\n';
  }
}

void write_error_table(const ErrorTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_error_table(table, out);
  if (!out) throw Error("failed writing " + path.string());
}

ErrorTable parse_error_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty error table");
  const auto header = split(line);
  if (header.size() < 6 || header.size() % 2 != 0 || header[0] != "M" || header[1] != "DOF_H" ||
      header[2] != "eL2_u" || header[3] != "eH1_u")
    throw ParseError("unexpected error table header");
  const std::size_t np = (header.size() - 4) / 2;
  for (std::size_t i = 0; i < np; ++i) {
    const std::string k = std::to_string(i + 1);
    if (header[4 + 2 * i] != "eL2_p" + k || header[5 + 2 * i] != "eH1_p" + k)
      throw ParseError("unexpected error table header");
  }
  ErrorTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw ParseError("error table row has the wrong number of columns");
    ErrorRow row;
    row.basis_per_vertex = parse_int(cells[0]);
    row.coarse_dofs = parse_int(cells[1]);
    row.displacement = {parse_percent(cells[2]), parse_percent(cells[3])};
    for (std::size_t i = 0; i < np; ++i)
      row.pressures.push_back({parse_percent(cells[4 + 2 * i]), parse_percent(cells[5 + 2 * i])});
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace fracporo
