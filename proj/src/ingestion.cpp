#include "seasonload/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "seasonload/csv.hpp"
#include "seasonload/errors.hpp"

namespace seasonload {

namespace {

using ojson = nlohmann::ordered_json;

bool parse_timestamp(const std::string& text, const std::string& format, Date& date, int& hour) {
  std::tm tm = {};
  tm.tm_mday = 1;
  std::istringstream ss(text);
  ss >> std::get_time(&tm, format.c_str());
  if (ss.fail()) return false;
  date = Date{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday};
  hour = tm.tm_hour;
  return is_valid_date(date) && hour >= 0 && hour <= 23;
}

std::size_t require_column(const CsvReader& reader, const std::string& name,
                           const std::filesystem::path& path) {
  auto idx = reader.column(name);
  if (!idx) throw DataError("'" + path.string() + "': missing column '" + name + "'");
  return *idx;
}

int decode_ordinal(const std::string& raw, const std::map<std::string, int>& order,
                   const std::string& what, std::string* error) {
  if (!order.empty()) {
    auto it = order.find(raw);
    if (it == order.end()) {
      *error = "unmapped " + what + " value '" + raw + "'";
      return -1;
    }
    return it->second;
  }
  long long v = 0;
  if (!parse_int(raw, v) || v < 0) {
    *error = "non-integer " + what + " value '" + raw + "'";
    return -1;
  }
  return static_cast<int>(v);
}

}  // namespace

Dataset parse_load_csv(const std::filesystem::path& path, const LoadFormatConfig& format,
                       LoadParseReport* report) {
  CsvReader reader(path);
  std::size_t c_consumer = require_column(reader, format.consumer_col, path);
  std::size_t c_ts = require_column(reader, format.timestamp_col, path);
  std::size_t c_kwh = require_column(reader, format.kwh_col, path);

  LoadParseReport local;
  Dataset out;
  std::vector<std::string> row;
  while (reader.next(row)) {
    ++local.rows_total;
    std::size_t needed = std::max({c_consumer, c_ts, c_kwh});
    if (row.size() <= needed) {
      ++local.rows_skipped;
      continue;
    }
    HourlyReading r;
    r.consumer = row[c_consumer];
    double kwh = 0.0;
    if (r.consumer.empty() || !parse_timestamp(row[c_ts], format.timestamp_format, r.date, r.hour) ||
        !parse_double(row[c_kwh], kwh) || !std::isfinite(kwh)) {
      ++local.rows_skipped;
      continue;
    }
    r.load_kwh = kwh;
    out.readings.push_back(std::move(r));
  }

  if (local.rows_total > 0 && local.rows_skipped * 2 > local.rows_total)
    throw DataError("'" + path.string() + "': " + std::to_string(local.rows_skipped) + " of " +
                    std::to_string(local.rows_total) +
                    " rows skipped; check the load format config");

  // Keep-last dedup on (consumer, date, hour); stable sort preserves file
  // order within equal keys.
  std::stable_sort(out.readings.begin(), out.readings.end(),
                   [](const HourlyReading& a, const HourlyReading& b) {
                     return std::tie(a.consumer, a.date, a.hour) < std::tie(b.consumer, b.date, b.hour);
                   });
  std::vector<HourlyReading> unique;
  unique.reserve(out.readings.size());
  for (std::size_t i = 0; i < out.readings.size(); ++i) {
    const auto& r = out.readings[i];
    bool last_of_key = i + 1 == out.readings.size() ||
                       std::tie(r.consumer, r.date, r.hour) !=
                           std::tie(out.readings[i + 1].consumer, out.readings[i + 1].date,
                                    out.readings[i + 1].hour);
    if (last_of_key)
      unique.push_back(r);
    else
      ++local.duplicates;
  }
  out.readings = std::move(unique);

  if (!out.readings.empty()) {
    out.span_first = out.readings.front().date;
    out.span_last = out.readings.front().date;
    for (const auto& r : out.readings) {
      out.span_first = std::min(out.span_first, r.date);
      out.span_last = std::max(out.span_last, r.date);
    }
  }
  if (report) *report = local;
  return out;
}

std::vector<SocioProfile> parse_socio_csv(const std::filesystem::path& path,
                                          const SocioFormatConfig& format,
                                          SocioParseReport* report) {
  CsvReader reader(path);
  std::size_t c_consumer = require_column(reader, format.consumer_col, path);
  std::size_t c_income = require_column(reader, format.income_col, path);
  std::size_t c_education = require_column(reader, format.education_col, path);
  std::vector<std::pair<std::string, std::size_t>> band_cols;
  for (const auto& [band, col] : format.age_band_cols)
    band_cols.emplace_back(band, require_column(reader, col, path));

  SocioParseReport local;
  std::vector<SocioProfile> out;
  std::vector<std::string> row;
  while (reader.next(row)) {
    ++local.rows_total;
    std::string error;
    SocioProfile p;
    std::size_t needed = std::max({c_consumer, c_income, c_education});
    for (const auto& [band, col] : band_cols) needed = std::max(needed, col);
    if (row.size() <= needed) {
      local.errors.push_back("row " + std::to_string(local.rows_total) + ": too few fields");
      ++local.rows_skipped;
      continue;
    }
    p.consumer = row[c_consumer];
    if (p.consumer.empty()) {
      local.errors.push_back("row " + std::to_string(local.rows_total) + ": empty consumer id");
      ++local.rows_skipped;
      continue;
    }
    for (const auto& [band, col] : band_cols) {
      long long count = 0;
      if (!parse_int(row[col], count) || count < 0) {
        error = "bad count for band '" + band + "': '" + row[col] + "'";
        break;
      }
      p.residents_by_age.emplace_back(band, static_cast<int>(count));
    }
    if (error.empty()) p.income_level = decode_ordinal(row[c_income], format.income_order, "income", &error);
    if (error.empty())
      p.education_level = decode_ordinal(row[c_education], format.education_order, "education", &error);
    if (!error.empty()) {
      local.errors.push_back(p.consumer + ": " + error);
      ++local.rows_skipped;
      continue;
    }
    out.push_back(std::move(p));
  }

  std::vector<ConsumerId> ids;
  ids.reserve(out.size());
  for (const auto& p : out) ids.push_back(p.consumer);
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end())
    throw DataError("'" + path.string() + "': duplicate consumer id '" + *dup + "'");

  std::sort(out.begin(), out.end(),
            [](const SocioProfile& a, const SocioProfile& b) { return a.consumer < b.consumer; });
  if (report) *report = local;
  return out;
}

void write_readings_jsonl(const std::filesystem::path& path,
                          const std::vector<HourlyReading>& readings) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  for (const auto& r : readings) {
    ojson j;
    j["consumer"] = r.consumer;
    j["date"] = to_string(r.date);
    j["hour"] = r.hour;
    j["kwh"] = r.load_kwh;
    out << j.dump() << '\n';
  }
}

std::vector<HourlyReading> read_readings_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::vector<HourlyReading> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ojson j = ojson::parse(line);
    HourlyReading r;
    r.consumer = j.at("consumer").get<std::string>();
    r.date = parse_date(j.at("date").get<std::string>());
    r.hour = j.at("hour").get<int>();
    r.load_kwh = j.at("kwh").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

void write_socio_jsonl(const std::filesystem::path& path, const std::vector<SocioProfile>& socio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  for (const auto& p : socio) {
    ojson j;
    j["consumer"] = p.consumer;
    ojson bands = ojson::array();
    for (const auto& [band, count] : p.residents_by_age)
      bands.push_back(ojson{{"band", band}, {"count", count}});
    j["residents_by_age"] = std::move(bands);
    j["income_level"] = p.income_level;
    j["education_level"] = p.education_level;
    out << j.dump() << '\n';
  }
}

std::vector<SocioProfile> read_socio_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::vector<SocioProfile> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ojson j = ojson::parse(line);
    SocioProfile p;
    p.consumer = j.at("consumer").get<std::string>();
    for (const auto& b : j.at("residents_by_age"))
      p.residents_by_age.emplace_back(b.at("band").get<std::string>(), b.at("count").get<int>());
    p.income_level = j.at("income_level").get<int>();
    p.education_level = j.at("education_level").get<int>();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace seasonload
