#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace fracporo {

/// A value of the configuration subset: booleans, integers, floats, basic
/// strings and (possibly nested, possibly multi-line) arrays.
struct TomlValue {
  using Array = std::vector<TomlValue>;
  std::variant<bool, std::int64_t, double, std::string, Array> data;
  int line = 0;

  bool is_number() const { return std::holds_alternative<std::int64_t>(data) || std::holds_alternative<double>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_array() const { return std::holds_alternative<Array>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }

  /// Throw ValidationError naming `key` on a type mismatch.
  double as_number(const std::string& key) const;
  std::int64_t as_integer(const std::string& key) const;
  const std::string& as_string(const std::string& key) const;
  const Array& as_array(const std::string& key) const;
  bool as_bool(const std::string& key) const;
};

/// Flat view of a document: every value is stored under its full dotted key
/// ("table.sub.key"), in file order. Supports [table] headers, bare and
/// dotted keys, and # comments. Inline tables, arrays of tables, literal and
/// multi-line strings and dates are rejected with ParseError.
class TomlDocument {
 public:
  static TomlDocument parse(std::istream& in, const std::string& source = "<input>");
  static TomlDocument parse_file(const std::string& path);

  const TomlValue* find(const std::string& key) const;
  const std::vector<std::string>& keys() const { return keys_; }
  /// Table headers in file order.
  const std::vector<std::string>& tables() const { return tables_; }

 private:
  std::vector<std::string> keys_;
  std::vector<TomlValue> values_;
  std::vector<std::string> tables_;
};

}  // namespace fracporo
