#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace seasonload {

/// Streaming RFC-4180 reader: quoted fields, embedded commas/newlines,
/// CRLF line endings. The first record is treated as the header.
class CsvReader {
public:
  explicit CsvReader(const std::filesystem::path& path);

  const std::vector<std::string>& header() const { return header_; }

  /// Column index for a header name, or nullopt.
  std::optional<std::size_t> column(const std::string& name) const;

  /// Reads the next record into `row` (cleared first). False at EOF.
  bool next(std::vector<std::string>& row);

private:
  bool read_record(std::vector<std::string>& row);

  std::ifstream in_;
  std::vector<std::string> header_;
};

std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);
bool parse_double(const std::string& s, double& out);
bool parse_int(const std::string& s, long long& out);

}  // namespace seasonload
