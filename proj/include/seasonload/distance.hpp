#pragma once

#include <Eigen/Dense>
#include <string>

namespace seasonload {

enum class DistanceMetric { euclidean, manhattan };

std::string to_string(DistanceMetric m);
DistanceMetric parse_distance_metric(const std::string& s);

inline double distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                       const Eigen::Ref<const Eigen::RowVectorXd>& b, DistanceMetric metric) {
  switch (metric) {
    case DistanceMetric::manhattan:
      return (a - b).cwiseAbs().sum();
    case DistanceMetric::euclidean:
    default:
      return (a - b).norm();
  }
}

/// Full symmetric pairwise distance matrix for row-major point sets.
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& points, DistanceMetric metric);

}  // namespace seasonload
