#include "somq/map_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "somq/errors.hpp"

namespace somq {

namespace {

struct Cube {
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;
};

// Even rows are shifted right by half a cell.
Cube offset_to_cube(GridPosition pos) {
  const auto row = static_cast<std::int64_t>(pos.row);
  const auto col = static_cast<std::int64_t>(pos.col);
  const std::int64_t x = col - (row + (row & 1)) / 2;
  const std::int64_t z = row;
  return {x, -x - z, z};
}

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

Topology parse_topology(std::string_view name) {
  if (name == "rectangular") return Topology::rectangular;
  if (name == "hexagonal") return Topology::hexagonal;
  throw ConfigError("unknown topology '" + std::string(name) + "' (valid: rectangular, hexagonal)");
}

std::string_view to_string(Topology topology) noexcept {
  return topology == Topology::rectangular ? "rectangular" : "hexagonal";
}

KernelKind parse_kernel(std::string_view name) {
  if (name == "gaussian") return KernelKind::gaussian;
  if (name == "window") return KernelKind::window;
  throw ConfigError("unknown kernel '" + std::string(name) + "' (valid: gaussian, window)");
}

std::string_view to_string(KernelKind kind) noexcept {
  return kind == KernelKind::gaussian ? "gaussian" : "window";
}

MapGrid::MapGrid(std::size_t rows, std::size_t cols, Topology topology)
    : rows_(rows), cols_(cols), topology_(topology) {
  if (rows == 0 || cols == 0) {
    throw DomainError("map grid needs at least one row and one column, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void MapGrid::check_unit(std::size_t unit) const {
  if (unit >= size()) {
    throw DomainError("unit index " + std::to_string(unit) + " out of range for a grid of " +
                      std::to_string(size()) + " units");
  }
}

GridPosition MapGrid::position(std::size_t unit) const {
  check_unit(unit);
  return {unit / cols_, unit % cols_};
}

std::size_t MapGrid::index(GridPosition pos) const {
  if (pos.row >= rows_ || pos.col >= cols_) {
    throw DomainError("grid position (" + std::to_string(pos.row) + ", " +
                      std::to_string(pos.col) + ") out of range");
  }
  return pos.row * cols_ + pos.col;
}

std::size_t MapGrid::distance(std::size_t k, std::size_t l) const {
  const GridPosition a = position(k);
  const GridPosition b = position(l);
  if (topology_ == Topology::rectangular) {
    return abs_diff(a.row, b.row) + abs_diff(a.col, b.col);
  }
  const Cube ca = offset_to_cube(a);
  const Cube cb = offset_to_cube(b);
  const std::int64_t d = std::max({std::abs(ca.x - cb.x), std::abs(ca.y - cb.y), std::abs(ca.z - cb.z)});
  return static_cast<std::size_t>(d);
}

std::vector<std::size_t> MapGrid::neighbors(std::size_t k) const {
  const GridPosition p = position(k);
  std::vector<std::size_t> out;
  // Every lattice neighbor lies in the surrounding 3x3 block of offset cells.
  const std::size_t r0 = p.row == 0 ? 0 : p.row - 1;
  const std::size_t c0 = p.col == 0 ? 0 : p.col - 1;
  const std::size_t r1 = std::min(p.row + 1, rows_ - 1);
  const std::size_t c1 = std::min(p.col + 1, cols_ - 1);
  for (std::size_t r = r0; r <= r1; ++r) {
    for (std::size_t c = c0; c <= c1; ++c) {
      const std::size_t l = r * cols_ + c;
      if (l != k && distance(k, l) == 1) out.push_back(l);
    }
  }
  return out;
}

std::size_t MapGrid::max_distance() const {
  if (size() < 2) throw DegenerateGridError("maximum map distance is undefined for a single unit");
  if (topology_ == Topology::rectangular) return (rows_ - 1) + (cols_ - 1);
  std::size_t best = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t l = k + 1; l < size(); ++l) best = std::max(best, distance(k, l));
  }
  return best;
}

DistanceTable::DistanceTable(const MapGrid& grid) : size_(grid.size()), table_(size_ * size_, 0) {
  for (std::size_t k = 0; k < size_; ++k) {
    for (std::size_t l = k + 1; l < size_; ++l) {
      const std::size_t d = grid.distance(k, l);
      table_[k * size_ + l] = d;
      table_[l * size_ + k] = d;
      max_ = std::max(max_, d);
    }
  }
}

double kernel_weight(KernelKind kind, double d, double temperature) {
  if (!(temperature > 0.0)) {
    throw DomainError("kernel temperature must be positive, got " + std::to_string(temperature));
  }
  if (!(d >= 0.0)) throw DomainError("kernel distance must be nonnegative");
  if (kind == KernelKind::window) return d <= temperature ? 1.0 : 0.0;
  return std::exp(-(d * d) / (temperature * temperature));
}

}  // namespace somq
