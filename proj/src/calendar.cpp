#include "seasonload/calendar.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "seasonload/errors.hpp"

namespace seasonload {

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[static_cast<std::size_t>(month - 1)];
}

bool is_valid_date(const Date& d) {
  return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

Date next_day(Date d) {
  if (++d.day > days_in_month(d.year, d.month)) {
    d.day = 1;
    if (++d.month > 12) {
      d.month = 1;
      ++d.year;
    }
  }
  return d;
}

std::string to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

Date parse_date(const std::string& s) {
  Date d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw DataError("invalid date '" + s + "' (expected YYYY-MM-DD)");
  auto num = [&](std::size_t pos, std::size_t len, int& out) {
    auto res = std::from_chars(s.data() + pos, s.data() + pos + len, out);
    return res.ec == std::errc{} && res.ptr == s.data() + pos + len;
  };
  if (!num(0, 4, d.year) || !num(5, 2, d.month) || !num(8, 2, d.day) || !is_valid_date(d))
    throw DataError("invalid date '" + s + "'");
  return d;
}

SeasonConfig SeasonConfig::meteorological() {
  SeasonConfig cfg;
  //                    Jan Feb Mar Apr May Jun Jul Aug Sep Oct Nov Dec
  cfg.month_to_season = {4, 4, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4};
  return cfg;
}

void SeasonConfig::validate() const {
  for (int s : month_to_season)
    if (s < 1 || s > 4) throw UsageError("season config: month values must be in 1..4");
}

int season_of(const Date& d, const SeasonConfig& cfg) {
  if (!is_valid_date(d)) throw DataError("season_of: invalid date " + to_string(d));
  return cfg.month_to_season[static_cast<std::size_t>(d.month - 1)];
}

int change_from_season(SeasonChange c) { return static_cast<int>(c) + 1; }

int change_to_season(SeasonChange c) { return static_cast<int>(c) + 2 > 4 ? 1 : static_cast<int>(c) + 2; }

std::string to_string(SeasonChange c) {
  switch (c) {
    case SeasonChange::spring_to_summer: return "spring_to_summer";
    case SeasonChange::summer_to_fall: return "summer_to_fall";
    case SeasonChange::fall_to_winter: return "fall_to_winter";
    case SeasonChange::winter_to_spring: return "winter_to_spring";
  }
  throw InternalError("unknown season change");
}

SeasonChange parse_season_change(const std::string& s) {
  for (SeasonChange c : kSeasonChanges)
    if (to_string(c) == s) return c;
  throw DataError("unknown season change '" + s + "'");
}

}  // namespace seasonload
