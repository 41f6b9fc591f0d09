#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace somq {

enum class Topology { rectangular, hexagonal };

enum class KernelKind { gaussian, window };

Topology parse_topology(std::string_view name);
std::string_view to_string(Topology topology) noexcept;
KernelKind parse_kernel(std::string_view name);
std::string_view to_string(KernelKind kind) noexcept;

struct GridPosition {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/**
 * Output lattice of a self-organizing map.
 *
 * Units are numbered 0..K-1 in row-major order. The map distance between two
 * units is the shortest-path length in the unit adjacency graph:
 *  - rectangular: 4-connected lattice, i.e. Manhattan distance;
 *  - hexagonal: even-row offset layout (even rows shifted right by half a
 *    cell), each unit touching up to six others; distances are computed in
 *    cube coordinates.
 */
class MapGrid {
 public:
  MapGrid(std::size_t rows, std::size_t cols, Topology topology = Topology::rectangular);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Topology topology() const noexcept { return topology_; }
  std::size_t size() const noexcept { return rows_ * cols_; }

  /// Lattice dimensionality: 1 for a single row or column, 2 otherwise.
  int dimensionality() const noexcept { return (rows_ == 1 || cols_ == 1) ? 1 : 2; }

  GridPosition position(std::size_t unit) const;
  std::size_t index(GridPosition pos) const;

  /// Shortest-path length between units k and l.
  std::size_t distance(std::size_t k, std::size_t l) const;

  /// Units at map distance exactly 1 from k, in increasing index order.
  std::vector<std::size_t> neighbors(std::size_t k) const;

  /// Largest distance over all unit pairs. Throws DegenerateGridError if K = 1.
  std::size_t max_distance() const;

  friend bool operator==(const MapGrid&, const MapGrid&) = default;

 private:
  void check_unit(std::size_t unit) const;

  std::size_t rows_;
  std::size_t cols_;
  Topology topology_;
};

/// Free-function spellings of the MapGrid queries.
inline std::size_t grid_distance(const MapGrid& grid, std::size_t k, std::size_t l) {
  return grid.distance(k, l);
}
inline std::vector<std::size_t> neighbors(const MapGrid& grid, std::size_t k) {
  return grid.neighbors(k);
}
inline std::size_t max_distance(const MapGrid& grid) { return grid.max_distance(); }

/// Dense K x K table of map distances, row-major.
class DistanceTable {
 public:
  explicit DistanceTable(const MapGrid& grid);

  std::size_t size() const noexcept { return size_; }
  std::size_t operator()(std::size_t k, std::size_t l) const noexcept {
    return table_[k * size_ + l];
  }
  std::size_t max() const noexcept { return max_; }

 private:
  std::size_t size_;
  std::size_t max_ = 0;
  std::vector<std::size_t> table_;
};

/// Neighborhood weight of a unit at map distance d under temperature T.
/// gaussian: exp(-d^2 / T^2); window: 1 if d <= T else 0.
double kernel_weight(KernelKind kind, double d, double temperature);

}  // namespace somq
