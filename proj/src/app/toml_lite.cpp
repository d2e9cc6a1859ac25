#include "fracporo/app/toml_lite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "fracporo/errors.hpp"

namespace fracporo {

namespace {

class Parser {
 public:
  Parser(std::string text, std::string source) : text_(std::move(text)), source_(std::move(source)) {}

  template <class Sink>
  void run(Sink&& sink) {
    std::string table;
    while (true) {
      skip_blank_and_comments();
      if (eof()) break;
      if (peek() == '[') {
        ++pos_;
        if (peek() == '[') fail("arrays of tables are not supported");
        skip_spaces();
        table = parse_key();
        skip_spaces();
        expect(']');
        end_of_line();
        sink.table(table, line_);
        continue;
      }
      const int key_line = line_;
      const std::string key = parse_key();
      skip_spaces();
      expect('=');
      skip_spaces();
      TomlValue v = parse_value();
      v.line = key_line;
      end_of_line();
      sink.value(table.empty() ? key : table + "." + key, std::move(v));
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ":" + std::to_string(line_) + ": " + what);
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') ++pos_;
  }

  // Whitespace, newlines and comments (between statements and inside arrays).
  void skip_blank_and_comments() {
    while (!eof()) {
      skip_spaces();
      skip_comment();
      if (peek() == '\r') {
        ++pos_;
      } else if (peek() == '\n') {
        ++pos_;
        ++line_;
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (peek() == '\r') ++pos_;
    if (eof()) return;
    if (peek() != '\n') fail("unexpected content after value");
    ++pos_;
    ++line_;
  }

  static bool bare(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

  std::string parse_key() {
    std::string key;
    while (true) {
      skip_spaces();
      std::string part;
      if (peek() == '"') {
        part = parse_string();
      } else {
        while (!eof() && bare(peek())) part += text_[pos_++];
      }
      if (part.empty()) fail("expected a key");
      key += part;
      skip_spaces();
      if (peek() != '.') break;
      ++pos_;
      key += '.';
    }
    return key;
  }

  std::string parse_string() {
    expect('"');
    if (text_.compare(pos_, 2, "\"\"") == 0) fail("multi-line strings are not supported");
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated string");
        const char e = text_[pos_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  TomlValue parse_value() {
    TomlValue v;
    const char c = peek();
    if (c == '"') {
      v.data = parse_string();
    } else if (c == '\'') {
      fail("literal strings are not supported");
    } else if (c == '{') {
      fail("inline tables are not supported");
    } else if (c == '[') {
      ++pos_;
      TomlValue::Array items;
      while (true) {
        skip_blank_and_comments();
        if (peek() == ']') {
          ++pos_;
          break;
        }
        items.push_back(parse_value());
        skip_blank_and_comments();
        if (peek() == ',') {
          ++pos_;
        } else if (peek() != ']') {
          fail("expected ',' or ']' in array");
        }
      }
      v.data = std::move(items);
    } else {
      std::string token;
      while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ',' && peek() != ']' &&
             peek() != '#')
        token += text_[pos_++];
      v.data = parse_scalar(token);
    }
    return v;
  }

  std::variant<bool, std::int64_t, double, std::string, TomlValue::Array> parse_scalar(std::string token) {
    if (token == "true") return true;
    if (token == "false") return false;
    if (token.empty()) fail("expected a value");
    token.erase(std::remove(token.begin(), token.end(), '_'), token.end());
    if (token == "inf" || token == "+inf" || token == "-inf" || token == "nan") fail("non-finite numbers are not allowed");
    const bool floating = token.find_first_of(".eE") != std::string::npos;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    if (floating) {
      double d = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, d);
      if (ec != std::errc() || ptr != last) fail("bad number '" + token + "'");
      return d;
    }
    std::int64_t i = 0;
    auto [ptr, ec] = std::from_chars(first, last, i);
    if (ec != std::errc() || ptr != last) fail("bad value '" + token + "'");
    return i;
  }

  std::string text_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string type_error(const std::string& key, const char* want, int line) {
  return "key '" + key + "' (line " + std::to_string(line) + ") must be " + want;
}

}  // namespace

double TomlValue::as_number(const std::string& key) const {
  if (const auto* i = std::get_if<std::int64_t>(&data)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&data)) return *d;
  throw ValidationError(type_error(key, "a number", line));
}

std::int64_t TomlValue::as_integer(const std::string& key) const {
  if (const auto* i = std::get_if<std::int64_t>(&data)) return *i;
  throw ValidationError(type_error(key, "an integer", line));
}

const std::string& TomlValue::as_string(const std::string& key) const {
  if (const auto* s = std::get_if<std::string>(&data)) return *s;
  throw ValidationError(type_error(key, "a string", line));
}

const TomlValue::Array& TomlValue::as_array(const std::string& key) const {
  if (const auto* a = std::get_if<Array>(&data)) return *a;
  throw ValidationError(type_error(key, "an array", line));
}

bool TomlValue::as_bool(const std::string& key) const {
  if (const auto* b = std::get_if<bool>(&data)) return *b;
  throw ValidationError(type_error(key, "a boolean", line));
}

TomlDocument TomlDocument::parse(std::istream& in, const std::string& source) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  Parser parser(buffer.str(), source);
  TomlDocument doc;
  struct Sink {
    TomlDocument& doc;
    Parser& parser;
    void table(const std::string& name, int) {
      if (std::find(doc.tables_.begin(), doc.tables_.end(), name) != doc.tables_.end())
        parser.fail("duplicate table [" + name + "]");
      doc.tables_.push_back(name);
    }
    void value(const std::string& key, TomlValue v) {
      if (doc.find(key)) parser.fail("duplicate key '" + key + "'");
      doc.keys_.push_back(key);
      doc.values_.push_back(std::move(v));
    }
  };
  parser.run(Sink{doc, parser});
  return doc;
}

TomlDocument TomlDocument::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return parse(in, path);
}

const TomlValue* TomlDocument::find(const std::string& key) const {
  for (std::size_t k = 0; k < keys_.size(); ++k)
    if (keys_[k] == key) return &values_[k];
  return nullptr;
}

}  // namespace fracporo
