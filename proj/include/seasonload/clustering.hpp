#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "seasonload/kmedoids.hpp"
#include "seasonload/preprocessing.hpp"

namespace seasonload {

/// Stage-1 output: one recurring load shape of a single consumer. The values
/// are an actual normalized day of that consumer (medoid property).
struct TypicalLoadProfile {
  ConsumerId consumer;
  int index = 0;  // 1-based within the consumer, at most 4
  HourVector values;
  std::vector<Date> member_days;
};

struct ConsumerStage1 {
  ConsumerId consumer;
  std::vector<TypicalLoadProfile> tlps;
  std::vector<int> day_to_tlp;  // parallel to the consumer's days, 0-based
  std::vector<Date> day_dates;
};

struct MedoidSource {
  ConsumerId consumer;
  int tlp_index = 0;  // 1-based
};

struct DayAssignment {
  ConsumerId consumer;
  Date date;
  int cluster = 0;  // 0-based internally; emitted 1-based in artifacts
};

struct ClusterModel {
  int k = 0;
  DistanceMetric metric = DistanceMetric::euclidean;
  std::uint64_t seed = 0;
  std::vector<HourVector> medoids;
  std::vector<MedoidSource> medoid_sources;
  std::vector<std::pair<int, double>> silhouette_by_k;  // ascending k
  std::vector<int> tlp_assignment;  // global TLP order: consumer asc, index asc
  std::vector<DayAssignment> day_assignment;
};

struct ClusterParams {
  DistanceMetric metric = DistanceMetric::euclidean;
  std::uint64_t seed = 1;
  int k_min = 2;
  int k_max = 10;
  int max_iter = 100;
};

/// Stage 1 for one consumer: K-Medoids with k = min(4, distinct day vectors).
ConsumerStage1 stage1_tlps(const ConsumerId& consumer, std::span<const DailyProfile> days,
                           DistanceMetric metric, int max_iter = 100);

/// Stage 1 for every consumer (input sorted by consumer, date); runs
/// consumers in parallel with deterministic output order.
std::vector<ConsumerStage1> stage1_all(std::span<const DailyProfile> days, DistanceMetric metric,
                                       int max_iter = 100);

/// Stage 2: clusters the pooled TLPs for each k in [k_min, k_max], selects k
/// by maximum mean silhouette (ties -> smallest k). Throws DataError when the
/// TLP set is degenerate (all identical) or smaller than k_max.
ClusterModel stage2_cluster(const std::vector<ConsumerStage1>& stage1, const ClusterParams& params);

/// Composes stage-1 day->TLP with stage-2 TLP->cluster into the final
/// per-day assignment.
void assign_days(const std::vector<ConsumerStage1>& stage1, ClusterModel& model);

}  // namespace seasonload
