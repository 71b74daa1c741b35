#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seasonload/calendar.hpp"

namespace seasonload {

using ConsumerId = std::string;

/// One metered hour for one consumer.
struct HourlyReading {
  ConsumerId consumer;
  Date date;
  int hour = 0;  // 0..23
  double load_kwh = 0.0;

  auto operator<=>(const HourlyReading&) const = default;
};

/// Socioeconomic attributes of one household. Age bands keep the order they
/// were configured in, which fixes the classifier feature order.
struct SocioProfile {
  ConsumerId consumer;
  std::vector<std::pair<std::string, int>> residents_by_age;
  int income_level = 0;
  int education_level = 0;

  bool operator==(const SocioProfile&) const = default;
};

struct Dataset {
  std::vector<HourlyReading> readings;  // sorted by (consumer, date, hour)
  std::vector<SocioProfile> socio;
  Date span_first;
  Date span_last;

  bool operator==(const Dataset&) const = default;
};

}  // namespace seasonload
