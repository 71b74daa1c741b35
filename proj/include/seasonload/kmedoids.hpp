#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "seasonload/distance.hpp"

namespace seasonload {

struct KMedoidsResult {
  std::vector<Eigen::Index> medoids;  // point indices, one per cluster label
  std::vector<int> assignment;        // point -> cluster in [0, k)
  double total_cost = 0.0;            // sum of distances to assigned medoids
  std::vector<double> cost_history;   // cost after every assign/update phase
  int iterations = 0;
  bool converged = false;
};

/// Park-Jun style K-Medoids on a precomputed distance matrix.
///
/// Initialization picks the k points with the smallest normalized distance
/// sums, preferring value-distinct points (zero distance to an already
/// selected medoid defers a point) so medoids stay distinct whenever k does
/// not exceed the number of distinct points. Alternates nearest-medoid
/// assignment (ties -> lowest cluster index; a medoid always stays in its own
/// cluster) with in-cluster medoid updates (ties -> lowest point index) until
/// assignments are stable or max_iter passes. Cost never increases between
/// recorded phases. Deterministic; `seed` is recorded by callers but the
/// algorithm itself draws no random numbers.
KMedoidsResult kmedoids_from_distances(const Eigen::MatrixXd& dist, int k, int max_iter = 100);

KMedoidsResult kmedoids(const Eigen::MatrixXd& points, int k, DistanceMetric metric,
                        std::uint64_t seed = 0, int max_iter = 100);

/// Mean silhouette coefficient in [-1, 1]. Singleton clusters contribute 0;
/// a zero max(a,b) contributes 0. Throws DataError with fewer than two
/// nonempty clusters.
double silhouette_from_distances(const Eigen::MatrixXd& dist, const std::vector<int>& assignment);

double silhouette(const Eigen::MatrixXd& points, const std::vector<int>& assignment,
                  DistanceMetric metric);

}  // namespace seasonload
