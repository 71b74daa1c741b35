#pragma once

#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "seasonload/classification.hpp"
#include "seasonload/clustering.hpp"
#include "seasonload/ingestion.hpp"
#include "seasonload/preprocessing.hpp"
#include "seasonload/seasonal.hpp"

namespace seasonload {

// Insertion-ordered JSON keeps configs and artifacts byte-stable.
using json = nlohmann::ordered_json;

json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

// Config (de)serialization.
LoadFormatConfig load_format_from_json(const json& j);
json to_json(const LoadFormatConfig& c);
SocioFormatConfig socio_format_from_json(const json& j);
json to_json(const SocioFormatConfig& c);
SeasonConfig season_config_from_json(const json& j);
json to_json(const SeasonConfig& c);

// Stage artifacts. CSV cluster ids and TLP indices are 1-based on disk.
void write_days_jsonl(const std::filesystem::path& path, std::span<const DailyProfile> days);
std::vector<DailyProfile> read_days_jsonl(const std::filesystem::path& path);

void write_preprocess_report(const std::filesystem::path& path, const PreprocessReport& report);

void write_tlps_jsonl(const std::filesystem::path& path, const std::vector<ConsumerStage1>& stage1);

void write_cluster_model(const std::filesystem::path& path, const ClusterModel& model);

void write_day_assignments_csv(const std::filesystem::path& path,
                               std::span<const DayAssignment> assignments);
std::vector<DayAssignment> read_day_assignments_csv(const std::filesystem::path& path);

void write_season_distributions_csv(const std::filesystem::path& path,
                                    std::span<const SeasonDistribution> distributions, int k);

void write_entropy_csv(const std::filesystem::path& path, std::span<const EntropyRecord> records);
std::vector<EntropyRecord> read_entropy_csv(const std::filesystem::path& path);

json boxplot_to_json(const std::vector<std::pair<SeasonChange, BoxplotStats>>& stats);

void write_labels_csv(const std::filesystem::path& path,
                      const std::map<SeasonChange, VariationDataset>& datasets, double threshold);

json tree_to_json(const DecisionTree& tree, SeasonChange change);

void write_importance_csv(const std::filesystem::path& path,
                          const std::map<SeasonChange, Eigen::VectorXd>& importance,
                          const std::vector<std::string>& feature_names);
std::map<SeasonChange, std::map<std::string, double>> read_importance_csv(
    const std::filesystem::path& path);

}  // namespace seasonload
