#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "somq/map_geometry.hpp"
#include "somq/som_model.hpp"

namespace somq {

/// counts(k, j) = number of samples in cluster k carrying class j.
class ContingencyTable {
 public:
  /// Cluster count is 1 + max assignment, class count 1 + max label.
  ContingencyTable(std::span<const std::size_t> assignments, std::span<const int> labels);

  std::size_t clusters() const noexcept { return clusters_; }
  std::size_t classes() const noexcept { return classes_; }
  std::size_t total() const noexcept { return total_; }
  std::int64_t operator()(std::size_t cluster, std::size_t cls) const noexcept {
    return counts_[cluster * classes_ + cls];
  }

 private:
  std::size_t clusters_ = 0;
  std::size_t classes_ = 0;
  std::size_t total_ = 0;
  std::vector<std::int64_t> counts_;
};

/**
 * Maximum-weight perfect matching on a square matrix (Hungarian method,
 * O(n^3)). `weights` is n x n row-major; returns the column matched to each row.
 */
std::vector<std::size_t> max_weight_assignment(std::span<const std::int64_t> weights, std::size_t n);

double purity(std::span<const std::size_t> assignments, std::span<const int> labels);

/// Best one-to-one cluster/class mapping accuracy. When the cluster and class
/// counts differ the contingency table is zero-padded to a square.
double clustering_accuracy(std::span<const std::size_t> assignments, std::span<const int> labels);

/// Per-class number of connected groups of map units hosting at least one
/// sample of that class (adjacency: map distance 1). Classes with no sample
/// report 0.
std::vector<std::size_t> class_group_counts(const MapGrid& grid, std::span<const std::size_t> bmus,
                                            std::span<const int> labels);

/// Mean group count over the classes that have at least one sample.
double class_scatter_index(const MapGrid& grid, std::span<const std::size_t> bmus,
                           std::span<const int> labels);
double class_scatter_index(const CodeBook& codebook, const Dataset& data);

}  // namespace somq
