#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracporo {

/// Relative errors (percent) of one field. Empty means undefined.
struct FieldError {
  std::optional<double> l2;
  std::optional<double> energy;
  bool operator==(const FieldError&) const = default;
};

/// One row per basis count: displacement first, then the bulk pressures.
struct ErrorRow {
  int basis_per_vertex = 0;
  int coarse_dofs = 0;
  FieldError displacement;
  std::vector<FieldError> pressures;

  bool operator==(const ErrorRow&) const = default;
};

struct ErrorTable {
  std::vector<ErrorRow> rows;

  bool operator==(const ErrorTable&) const = default;
};

/// CSV: header M,DOF_H,eL2_u,eH1_u,eL2_p1,eH1_p1[,eL2_p2,eH1_p2...], values with
/// three decimals, "nan" for undefined entries. All rows must report the same
/// number of pressures.
void write_error_table(const ErrorTable& table, std::ostream& out);
void write_error_table(const ErrorTable& table, const std::filesystem::path& path);

/// Inverse of write_error_table (values rounded to three decimals).
ErrorTable parse_error_table(std::istream& in);

/// Formats a percentage with three decimals, "nan" when empty.
std::string format_percent(const std::optional<double>& value);

}  // namespace fracporo
