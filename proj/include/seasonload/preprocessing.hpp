#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <vector>

#include "seasonload/types.hpp"

namespace seasonload {

using HourVector = Eigen::Matrix<double, 24, 1>;

/// One complete consumer-day in raw kWh.
struct RawDay {
  ConsumerId consumer;
  Date date;
  HourVector kwh;
};

/// One consumer-day min-max normalized to [0,1].
struct DailyProfile {
  ConsumerId consumer;
  Date date;
  HourVector values;
};

struct OutlierRule {
  // A day is dropped when any hour is negative, non-finite, or exceeds
  // cap_multiplier x the consumer's median positive hourly load.
  double cap_multiplier = 10.0;
};

struct PreprocessReport {
  std::size_t days_total = 0;
  std::size_t days_retained = 0;
  std::size_t days_dropped_incomplete = 0;
  std::size_t days_dropped_outlier = 0;
  std::size_t days_constant = 0;  // retained, normalized to all-0.5
  std::map<ConsumerId, std::size_t> retained_days_by_consumer;
  std::vector<ConsumerId> consumers_with_zero_retained;
};

/// Groups readings into raw day vectors; only days with all 24 hours present
/// are emitted, the rest are counted as incomplete. Output is ordered by
/// (consumer, date).
std::vector<RawDay> build_days(const Dataset& dataset, PreprocessReport& report);

/// Applies the outlier rule per consumer. The median positive hourly load is
/// taken over all of that consumer's complete days.
std::vector<RawDay> remove_outlier_days(std::vector<RawDay> days, const OutlierRule& rule,
                                        PreprocessReport& report);

/// Min-max normalization of one day: (v - min) / (max - min). A constant day
/// maps to all 0.5 and sets *constant_day.
HourVector normalize_day(const HourVector& raw, bool* constant_day = nullptr);

std::vector<DailyProfile> normalize_days(const std::vector<RawDay>& days, PreprocessReport& report);

/// build_days + remove_outlier_days + normalize_days, filling the report.
std::vector<DailyProfile> preprocess(const Dataset& dataset, const OutlierRule& rule,
                                     PreprocessReport& report);

}  // namespace seasonload
