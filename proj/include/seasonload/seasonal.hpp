#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "seasonload/calendar.hpp"
#include "seasonload/clustering.hpp"

namespace seasonload {

/// Cluster-occupancy distribution of one consumer in one season.
struct SeasonDistribution {
  ConsumerId consumer;
  int season = 0;  // 1..4
  std::size_t day_count = 0;
  Eigen::VectorXd probs;  // length K, sums to 1
};

struct EntropyRecord {
  ConsumerId consumer;
  SeasonChange change = SeasonChange::spring_to_summer;
  double re = 0.0;  // may be +inf in unsmoothed mode
};

struct SeasonalOptions {
  double smoothing = 0.5;     // additive epsilon; 0 reproduces raw frequencies
  std::size_t min_days = 14;  // per consumer-season eligibility floor
  SeasonConfig seasons = SeasonConfig::meteorological();
};

/// (count_k + eps) / (total + eps*K).
Eigen::VectorXd occupancy_probs(const Eigen::VectorXi& counts, double eps);

/// Base-K relative entropy of p_to from p_from, weighted by the destination
/// distribution: sum_k p_to[k] * log_K(p_to[k] / p_from[k]). Zero p_to terms
/// contribute 0; a zero in p_from under a nonzero p_to yields +inf.
double relative_entropy(const Eigen::VectorXd& p_from, const Eigen::VectorXd& p_to);

struct EntropyDiagnostics {
  std::size_t insufficient_consumer_seasons = 0;
  std::size_t skipped_records = 0;  // change pairs missing an eligible season
  std::size_t nonfinite_re = 0;
};

struct EntropyResult {
  std::vector<SeasonDistribution> distributions;  // eligible consumer-seasons only
  std::vector<EntropyRecord> records;             // up to 4 per consumer
  EntropyDiagnostics diagnostics;
};

/// Per-consumer season distributions and the four adjacent-season relative
/// entropies. Seasons are pooled across all years in the span.
EntropyResult entropy_table(std::span<const DayAssignment> day_assignment, int k,
                            const SeasonalOptions& options);

struct BoxplotStats {
  std::size_t count = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;  // whiskers at 1.5 IQR
  std::vector<double> outliers;
};

/// Tukey box-plot statistics per season change; groups with no finite record
/// are omitted. Non-finite records are excluded and counted.
std::vector<std::pair<SeasonChange, BoxplotStats>> boxplot_stats(
    std::span<const EntropyRecord> records, std::size_t* nonfinite_excluded = nullptr);

/// Linear-interpolation quantile of unsorted values, q in [0,1].
double quantile_linear(std::vector<double> values, double q);

}  // namespace seasonload
