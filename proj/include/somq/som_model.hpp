#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "somq/map_geometry.hpp"
#include "somq/matrix.hpp"

namespace somq {

/// Prototype vectors of a map: row k of `prototypes` belongs to unit k.
class CodeBook {
 public:
  CodeBook(Matrix prototypes, MapGrid grid);

  const Matrix& prototypes() const noexcept { return prototypes_; }
  Matrix& prototypes() noexcept { return prototypes_; }
  const MapGrid& grid() const noexcept { return grid_; }
  std::size_t units() const noexcept { return prototypes_.rows(); }
  std::size_t dim() const noexcept { return prototypes_.cols(); }
  std::span<const double> prototype(std::size_t k) const noexcept { return prototypes_.row(k); }

 private:
  Matrix prototypes_;
  MapGrid grid_;
};

/// Samples (one per row) with optional integer class labels.
class Dataset {
 public:
  explicit Dataset(Matrix samples, std::optional<std::vector<int>> labels = std::nullopt);

  const Matrix& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.rows(); }
  std::size_t dim() const noexcept { return samples_.cols(); }
  std::span<const double> sample(std::size_t i) const noexcept { return samples_.row(i); }

  bool has_labels() const noexcept { return labels_.has_value(); }
  const std::vector<int>& labels() const;
  /// 1 + largest label; 0 when unlabeled.
  std::size_t class_count() const noexcept;

 private:
  Matrix samples_;
  std::optional<std::vector<int>> labels_;
};

/// Per-sample units ordered by ascending squared distance, ties to the lowest
/// index, truncated to `depth` entries.
class ProjectionIndex {
 public:
  ProjectionIndex(std::size_t samples, std::size_t depth, std::vector<std::size_t> ranks);

  std::size_t samples() const noexcept { return samples_; }
  std::size_t depth() const noexcept { return depth_; }
  /// r-th best-matching unit of sample i (r = 0 is the BMU).
  std::size_t unit(std::size_t i, std::size_t r) const noexcept { return ranks_[i * depth_ + r]; }
  std::size_t bmu(std::size_t i) const noexcept { return unit(i, 0); }
  std::span<const std::size_t> ranking(std::size_t i) const noexcept {
    return {ranks_.data() + i * depth_, depth_};
  }
  std::vector<std::size_t> bmus() const;

 private:
  std::size_t samples_;
  std::size_t depth_;
  std::vector<std::size_t> ranks_;
};

ProjectionIndex project(const CodeBook& codebook, const Dataset& data, std::size_t depth = 1);

/// Throws ShapeError / DomainError when the pair cannot be evaluated together.
void check_compatible(const CodeBook& codebook, const Dataset& data);

/// Symmetric K x K adjacency of receptive fields, row-major: entry (c, c') is
/// set when some sample has {BMU, second BMU} = {c, c'}.
class Connectivity {
 public:
  explicit Connectivity(std::size_t units) : units_(units), cells_(units * units, 0) {}

  std::size_t units() const noexcept { return units_; }
  bool operator()(std::size_t a, std::size_t b) const noexcept { return cells_[a * units_ + b] != 0; }
  void connect(std::size_t a, std::size_t b) noexcept {
    cells_[a * units_ + b] = 1;
    cells_[b * units_ + a] = 1;
  }

 private:
  std::size_t units_;
  std::vector<std::uint8_t> cells_;
};

Connectivity receptive_field_connectivity(const CodeBook& codebook, const Dataset& data);

struct TrainerConfig {
  std::size_t rows = 10;
  std::size_t cols = 10;
  Topology topology = Topology::rectangular;
  double t_max = 10.0;
  double t_min = 0.1;
  std::size_t iterations = 20000;
  /// Initial learning rate; decays linearly toward zero over the run.
  double alpha = 0.5;
  std::uint64_t seed = 0;
  KernelKind kernel = KernelKind::gaussian;

  /// Throws DomainError unless t_max >= t_min > 0, alpha > 0, iterations >= 1.
  void validate() const;
};

/// K data rows drawn without replacement (with replacement when N < K).
CodeBook init_codebook(const Dataset& data, const MapGrid& grid, std::uint64_t seed);
CodeBook init_codebook(const Dataset& data, const MapGrid& grid, std::mt19937_64& rng);

/**
 * Stochastic (online) SOM training.
 *
 * At step n = 1..iterations the temperature is T_max (T_min/T_max)^(n/iterations)
 * and the learning rate alpha (1 - (n-1)/iterations); a sample is drawn
 * uniformly with replacement, and every prototype moves toward it by
 * rate * kernel(delta(bmu, k), T). Deterministic for a given seed.
 */
CodeBook train_som(const Dataset& data, const TrainerConfig& config);

/// Continues training from an existing codebook; the config's map size must match it.
CodeBook train_som(const Dataset& data, CodeBook initial, const TrainerConfig& config);

}  // namespace somq
