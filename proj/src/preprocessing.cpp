#include "seasonload/preprocessing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seasonload/errors.hpp"

namespace seasonload {

std::vector<RawDay> build_days(const Dataset& dataset, PreprocessReport& report) {
  std::vector<RawDay> days;
  const auto& readings = dataset.readings;
  std::size_t i = 0;
  while (i < readings.size()) {
    std::size_t j = i;
    while (j < readings.size() && readings[j].consumer == readings[i].consumer &&
           readings[j].date == readings[i].date)
      ++j;
    ++report.days_total;
    if (j - i == 24) {  // keys are unique, so 24 readings means all hours present
      RawDay day;
      day.consumer = readings[i].consumer;
      day.date = readings[i].date;
      for (std::size_t r = i; r < j; ++r) day.kwh[readings[r].hour] = readings[r].load_kwh;
      days.push_back(std::move(day));
    } else {
      ++report.days_dropped_incomplete;
    }
    i = j;
  }
  return days;
}

std::vector<RawDay> remove_outlier_days(std::vector<RawDay> days, const OutlierRule& rule,
                                        PreprocessReport& report) {
  std::vector<RawDay> kept;
  kept.reserve(days.size());
  std::set<ConsumerId> seen;

  std::size_t i = 0;
  while (i < days.size()) {
    std::size_t j = i;
    while (j < days.size() && days[j].consumer == days[i].consumer) ++j;
    seen.insert(days[i].consumer);

    std::vector<double> positives;
    for (std::size_t d = i; d < j; ++d)
      for (int t = 0; t < 24; ++t)
        if (days[d].kwh[t] > 0.0 && std::isfinite(days[d].kwh[t])) positives.push_back(days[d].kwh[t]);
    double median = 0.0;
    if (!positives.empty()) {
      std::sort(positives.begin(), positives.end());
      std::size_t m = positives.size() / 2;
      median = positives.size() % 2 ? positives[m] : 0.5 * (positives[m - 1] + positives[m]);
    }
    double cap = median > 0.0 ? rule.cap_multiplier * median : 0.0;

    for (std::size_t d = i; d < j; ++d) {
      bool drop = false;
      for (int t = 0; t < 24 && !drop; ++t) {
        double v = days[d].kwh[t];
        drop = v < 0.0 || !std::isfinite(v) || (cap > 0.0 && v > cap);
      }
      if (drop)
        ++report.days_dropped_outlier;
      else
        kept.push_back(std::move(days[d]));
    }
    i = j;
  }

  report.days_retained = kept.size();
  report.retained_days_by_consumer.clear();
  for (const auto& d : kept) ++report.retained_days_by_consumer[d.consumer];
  report.consumers_with_zero_retained.clear();
  for (const auto& c : seen)
    if (!report.retained_days_by_consumer.count(c)) report.consumers_with_zero_retained.push_back(c);
  return kept;
}

HourVector normalize_day(const HourVector& raw, bool* constant_day) {
  double mn = raw.minCoeff();
  double mx = raw.maxCoeff();
  if (constant_day) *constant_day = (mx == mn);
  if (mx == mn) return HourVector::Constant(0.5);
  return (raw.array() - mn) / (mx - mn);
}

std::vector<DailyProfile> normalize_days(const std::vector<RawDay>& days, PreprocessReport& report) {
  std::vector<DailyProfile> out;
  out.reserve(days.size());
  for (const auto& d : days) {
    bool constant = false;
    DailyProfile p;
    p.consumer = d.consumer;
    p.date = d.date;
    p.values = normalize_day(d.kwh, &constant);
    if (constant) ++report.days_constant;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<DailyProfile> preprocess(const Dataset& dataset, const OutlierRule& rule,
                                     PreprocessReport& report) {
  report = PreprocessReport{};
  auto days = build_days(dataset, report);
  days = remove_outlier_days(std::move(days), rule, report);
  return normalize_days(days, report);
}

}  // namespace seasonload
