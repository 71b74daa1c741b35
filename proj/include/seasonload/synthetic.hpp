#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "seasonload/ingestion.hpp"
#include "seasonload/preprocessing.hpp"
#include "seasonload/types.hpp"

namespace seasonload {

/// Rewrites one season's prototype mixture for consumers whose socio feature
/// clears min_value: mix = (1 - shift_fraction) * mix + shift_fraction * e_target.
struct SocioRule {
  std::string feature;  // age band label, "income_level", or "education_level"
  double min_value = 0.0;
  int season = 2;  // season whose mixture is shifted, 1..4
  int target_prototype = 0;
  double shift_fraction = 0.0;
};

struct CohortSpec {
  int n_consumers = 200;
  int years = 3;
  int start_year = 2015;
  std::vector<HourVector> prototypes;
  std::array<Eigen::VectorXd, 4> base_mixture_by_season;  // index 0 = spring
  std::vector<SocioRule> socio_rules;
  double noise_sigma = 0.05;
  double label_threshold = 0.15;  // true RE above this plants a variation label
  std::uint64_t seed = 1;

  /// Throws DataError unless prototypes are pairwise separated by at least
  /// 4 * noise_sigma * sqrt(24) and every mixture sums to 1.
  void validate() const;
};

/// Canonical well-separated day shapes (morning, evening, night, midday,
/// double peak, broad), each spanning [0,1]. count <= 6.
std::vector<HourVector> default_prototypes(int count);

/// Spec with `count` default prototypes, uniform mixtures and no socio rules.
CohortSpec make_uniform_spec(int prototype_count, int n_consumers, int years, std::uint64_t seed);

/// Spec planting a summer shift for high-income consumers (income >= 4 moves
/// 60% of summer mass onto the last prototype, decaying through fall and
/// winter so only the spring-to-summer change carries a large RE).
CohortSpec make_income_shift_spec(int prototype_count, int n_consumers, int years,
                                  std::uint64_t seed);

struct SyntheticConsumer {
  ConsumerId id;
  double scale_kwh = 1.0;
  SocioProfile socio;
  std::array<Eigen::VectorXd, 4> mixture_by_season;
  std::array<double, 4> true_re_by_change{};
  std::array<bool, 4> true_label_by_change{};
  std::vector<int> day_prototype;       // in date order from `start`
  std::vector<HourVector> day_kwh;      // parallel to day_prototype
};

struct Cohort {
  CohortSpec spec;
  Date start;
  Date end;  // inclusive
  std::vector<SyntheticConsumer> consumers;
};

/// Deterministic generation; single-threaded by design.
Cohort generate_cohort(const CohortSpec& spec);

/// In-memory views used by tests and the timed pipeline path.
Dataset cohort_to_dataset(const Cohort& cohort);
std::vector<RawDay> cohort_to_raw_days(const Cohort& cohort);

struct CohortFiles {
  std::filesystem::path load_csv;
  std::filesystem::path socio_csv;
  std::filesystem::path ground_truth;
  std::filesystem::path load_format;
  std::filesystem::path socio_format;
};

/// Writes synthetic_load.csv, synthetic_socio.csv, ground_truth.json plus the
/// matching format configs. Byte-identical for identical specs.
CohortFiles write_cohort(const Cohort& cohort, const std::filesystem::path& out_dir);

LoadFormatConfig synthetic_load_format();
SocioFormatConfig synthetic_socio_format();

}  // namespace seasonload
