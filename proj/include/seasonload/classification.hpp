#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seasonload/seasonal.hpp"
#include "seasonload/types.hpp"

namespace seasonload {

enum class ThresholdMode { reference_distribution, quantile, absolute };

std::string to_string(ThresholdMode m);
ThresholdMode parse_threshold_mode(const std::string& s);

/// How the variation/no-variation split point is chosen.
///   reference_distribution: RE of a uniform base against the distribution
///     obtained by moving fraction `parameter` of the other clusters' mass,
///     pro rata, onto one cluster.
///   quantile: the parameter-quantile of the observed RE samples.
///   absolute: the parameter itself.
struct ThresholdSpec {
  ThresholdMode mode = ThresholdMode::quantile;
  double parameter = 2.0 / 3.0;
};

double compute_threshold(const ThresholdSpec& spec, std::span<const EntropyRecord> records, int k);

// Class labels: 0 = no_variation, 1 = variation.
inline constexpr int kNoVariation = 0;
inline constexpr int kVariation = 1;

struct VariationRow {
  ConsumerId consumer;
  Eigen::VectorXd features;
  int label = kNoVariation;
  double re = 0.0;
};

struct VariationDataset {
  SeasonChange change = SeasonChange::spring_to_summer;
  std::vector<std::string> feature_names;  // age bands, then income, education
  std::vector<VariationRow> rows;
  std::size_t excluded_no_socio = 0;
};

/// One dataset per season change; label = variation iff RE > threshold
/// (strictly). Consumers without a socio profile are excluded and counted.
/// Non-finite REs always label as variation.
std::map<SeasonChange, VariationDataset> build_variation_datasets(
    std::span<const EntropyRecord> records, std::span<const SocioProfile> socio, double threshold);

struct TreeNode {
  bool is_leaf = true;
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::size_t n = 0;
  std::array<std::size_t, 2> class_counts{};
  int prediction = kNoVariation;
  double gini = 0.0;
  double weighted_gain = 0.0;  // n*G(node) - nL*G(L) - nR*G(R), split nodes only
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // node 0 is the root
  int split_count = 0;
  std::vector<std::string> feature_names;
  bool degenerate = false;  // stump forced by missing class or unsplittable rows

  int predict(const Eigen::VectorXd& features) const;
};

struct TreeParams {
  int max_splits = 20;
  int min_leaf = 5;
};

/// CART growth, best-first over the leaf frontier by Gini impurity decrease.
/// Candidate thresholds are midpoints between adjacent distinct feature
/// values; ties break on lowest feature index, then lowest threshold, then
/// oldest leaf. Growth stops at max_splits, purity, or min_leaf.
DecisionTree train_tree(const VariationDataset& dataset, const TreeParams& params = {});

struct CvResult {
  std::vector<double> fold_accuracy;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation over folds
  std::size_t degenerate_folds = 0;
};

/// Stratified k-fold CV with a seeded shuffle; deterministic for a fixed
/// (dataset order, seed). Folds missing a class still score, with a count.
CvResult cross_validate(const VariationDataset& dataset, const TreeParams& params, int folds,
                        std::uint64_t seed);

/// Per-feature importance: node-size-weighted Gini decrease summed per
/// feature, normalized to 1 (all zeros for a stump).
Eigen::VectorXd predictor_importance(const DecisionTree& tree);

}  // namespace seasonload
