#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seasonload/artifacts.hpp"
#include "seasonload/classification.hpp"
#include "seasonload/clustering.hpp"
#include "seasonload/ingestion.hpp"
#include "seasonload/preprocessing.hpp"
#include "seasonload/seasonal.hpp"

namespace seasonload {

/// One run manifest for the whole pipeline; every stage reads what it needs
/// from here so a committed config reproduces a run exactly.
struct RunConfig {
  std::filesystem::path load_csv;
  std::filesystem::path socio_csv;  // may be empty; classify then aborts
  std::filesystem::path output_dir;

  LoadFormatConfig load_format;
  SocioFormatConfig socio_format;
  SeasonConfig seasons = SeasonConfig::meteorological();
  OutlierRule outlier;
  ClusterParams clustering;
  double smoothing = 0.5;
  std::size_t min_days = 14;
  ThresholdSpec threshold;
  TreeParams tree;
  int folds = 5;
  std::uint64_t classify_seed = 1;
  std::vector<ConsumerId> report_consumers;  // empty = all

  void validate() const;
};

RunConfig run_config_from_json(const json& j);
json to_json(const RunConfig& c);
RunConfig load_run_config(const std::filesystem::path& path);

// Stage entry points. Each reads earlier artifacts from output_dir and
// persists its own before returning; a throw leaves earlier files intact.
void stage_ingest(const RunConfig& config);
void stage_preprocess(const RunConfig& config);
void stage_cluster(const RunConfig& config);
void stage_entropy(const RunConfig& config);
void stage_classify(const RunConfig& config);
void stage_report(const RunConfig& config);

struct RunReport {
  int chosen_k = 0;
  std::vector<std::pair<int, double>> silhouette_by_k;
  std::map<SeasonChange, double> re_median_by_change;
  std::map<SeasonChange, std::vector<std::pair<std::string, double>>> top_importances;
  std::map<std::string, std::string> artifacts;  // name -> path
};

/// ingest -> preprocess -> cluster -> entropy -> classify -> report.
/// A stage failure rethrows tagged with the stage name; earlier artifacts
/// stay on disk for debugging.
RunReport run_pipeline(const RunConfig& config);

/// Re-emits the three figure datasets from existing artifacts.
void emit_figures(const std::filesystem::path& artifacts_dir,
                  const std::vector<ConsumerId>& consumers);

}  // namespace seasonload
