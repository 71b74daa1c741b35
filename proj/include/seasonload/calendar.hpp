#pragma once

#include <array>
#include <compare>
#include <string>

namespace seasonload {

/// Civil calendar date. Comparison order is chronological.
struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  auto operator<=>(const Date&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);
bool is_valid_date(const Date& d);
Date next_day(Date d);

std::string to_string(const Date& d);  // YYYY-MM-DD
Date parse_date(const std::string& s);

/// Month -> season mapping, seasons numbered 1=spring, 2=summer, 3=fall,
/// 4=winter. Default is meteorological (Mar-May, Jun-Aug, Sep-Nov, Dec-Feb).
struct SeasonConfig {
  std::array<int, 12> month_to_season{};  // index 0 = January

  static SeasonConfig meteorological();
  void validate() const;
};

int season_of(const Date& d, const SeasonConfig& cfg = SeasonConfig::meteorological());

/// The four adjacent-season transitions.
enum class SeasonChange {
  spring_to_summer = 0,
  summer_to_fall = 1,
  fall_to_winter = 2,
  winter_to_spring = 3,
};

inline constexpr std::array<SeasonChange, 4> kSeasonChanges = {
    SeasonChange::spring_to_summer,
    SeasonChange::summer_to_fall,
    SeasonChange::fall_to_winter,
    SeasonChange::winter_to_spring,
};

int change_from_season(SeasonChange c);  // 1..4
int change_to_season(SeasonChange c);    // 1..4
std::string to_string(SeasonChange c);
SeasonChange parse_season_change(const std::string& s);

}  // namespace seasonload
