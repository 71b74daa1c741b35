#include "seasonload/csv.hpp"

#include <charconv>
#include <limits>
#include <system_error>

#include "seasonload/errors.hpp"

namespace seasonload {

CsvReader::CsvReader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
  if (!in_) throw DataError("cannot open '" + path.string() + "'");
  if (!read_record(header_)) throw DataError("'" + path.string() + "' is empty");
}

std::optional<std::size_t> CsvReader::column(const std::string& name) const {
  for (std::size_t i = 0; i < header_.size(); ++i)
    if (header_[i] == name) return i;
  return std::nullopt;
}

bool CsvReader::next(std::vector<std::string>& row) { return read_record(row); }

bool CsvReader::read_record(std::vector<std::string>& row) {
  row.clear();
  int c = in_.get();
  if (c == EOF) return false;

  std::string field;
  bool quoted = false;
  while (true) {
    if (quoted) {
      if (c == EOF) break;  // unterminated quote: take what we have
      if (c == '"') {
        int peek = in_.get();
        if (peek == '"') {
          field += '"';
        } else {
          quoted = false;
          c = peek;
          continue;
        }
      } else {
        field += static_cast<char>(c);
      }
    } else {
      if (c == EOF || c == '\n') break;
      if (c == '\r') {
        int peek = in_.peek();
        if (peek == '\n') in_.get();
        break;
      }
      if (c == ',') {
        row.push_back(std::move(field));
        field.clear();
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else {
        field += static_cast<char>(c);
      }
    }
    c = in_.get();
  }
  row.push_back(std::move(field));
  return true;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto res = std::from_chars(begin, end, out);
  if (res.ec == std::errc{} && res.ptr == end) return true;
  // from_chars does not accept "inf"/"nan" spellings we emit as sentinels
  if (s == "inf") { out = std::numeric_limits<double>::infinity(); return true; }
  if (s == "-inf") { out = -std::numeric_limits<double>::infinity(); return true; }
  return false;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace seasonload
