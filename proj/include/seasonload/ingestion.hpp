#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seasonload/types.hpp"

namespace seasonload {

/// Binds raw load-CSV columns. `timestamp_format` is a std::get_time format
/// that must yield a calendar date and an hour, e.g. "%Y-%m-%dT%H:%M:%S".
struct LoadFormatConfig {
  std::string consumer_col;
  std::string timestamp_col;
  std::string kwh_col;
  std::string timestamp_format;
};

/// Binds socio-CSV columns. `age_band_cols` maps band label -> column name
/// in file order; that order becomes the feature order downstream.
/// `income_order` / `education_order` map source bracket strings to ordinal
/// codes; when empty the column must already hold non-negative integers.
struct SocioFormatConfig {
  std::string consumer_col;
  std::vector<std::pair<std::string, std::string>> age_band_cols;
  std::string income_col;
  std::string education_col;
  std::map<std::string, int> income_order;
  std::map<std::string, int> education_order;
};

struct LoadParseReport {
  std::size_t rows_total = 0;    // data rows seen
  std::size_t rows_skipped = 0;  // unparseable rows
  std::size_t duplicates = 0;    // (consumer,date,hour) collisions resolved keep-last
};

struct SocioParseReport {
  std::size_t rows_total = 0;
  std::size_t rows_skipped = 0;
  std::vector<std::string> errors;  // one entry per skipped row
};

/// Parses a raw hourly-load CSV into a readings-only Dataset. Malformed rows
/// are skipped and counted; duplicate keys keep the last occurrence. Fatal:
/// unreadable file, missing configured column, or >50% of rows skipped.
Dataset parse_load_csv(const std::filesystem::path& path, const LoadFormatConfig& format,
                       LoadParseReport* report = nullptr);

/// Parses household metadata. Rows with unmapped categorical values are
/// skipped and reported. Fatal: duplicate consumer id, missing column.
std::vector<SocioProfile> parse_socio_csv(const std::filesystem::path& path,
                                          const SocioFormatConfig& format,
                                          SocioParseReport* report = nullptr);

// Canonical internal format: one JSON object per line, bit-exact round-trip.
void write_readings_jsonl(const std::filesystem::path& path, const std::vector<HourlyReading>& readings);
std::vector<HourlyReading> read_readings_jsonl(const std::filesystem::path& path);
void write_socio_jsonl(const std::filesystem::path& path, const std::vector<SocioProfile>& socio);
std::vector<SocioProfile> read_socio_jsonl(const std::filesystem::path& path);

}  // namespace seasonload
