#include "somq/metrics_external.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "somq/errors.hpp"

namespace somq {

namespace {

void check_lengths(std::span<const std::size_t> assignments, std::span<const int> labels) {
  if (assignments.size() != labels.size()) {
    throw ShapeError("assignment count " + std::to_string(assignments.size()) +
                     " does not match label count " + std::to_string(labels.size()));
  }
  if (assignments.empty()) throw DomainError("external indices need at least one sample");
  for (int label : labels) {
    if (label < 0) throw DomainError("class labels must be nonnegative");
  }
}

}  // namespace

ContingencyTable::ContingencyTable(std::span<const std::size_t> assignments, std::span<const int> labels) {
  check_lengths(assignments, labels);
  clusters_ = *std::max_element(assignments.begin(), assignments.end()) + 1;
  classes_ = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
  total_ = assignments.size();
  counts_.assign(clusters_ * classes_, 0);
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    ++counts_[assignments[i] * classes_ + static_cast<std::size_t>(labels[i])];
  }
}

std::vector<std::size_t> max_weight_assignment(std::span<const std::int64_t> weights, std::size_t n) {
  if (weights.size() != n * n) throw ShapeError("assignment weights must form an n x n matrix");
  if (n == 0) return {};
  // Shortest augmenting path with potentials on cost = -weight; 1-based with a
  // virtual column 0.
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0);
  std::vector<std::int64_t> v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0);  // match[col] = row
  std::vector<std::size_t> way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = match[col0];
      std::int64_t delta = inf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const std::int64_t cur = -weights[(r0 - 1) * n + (col - 1)] - u[r0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t col = 1; col <= n; ++col) assignment[match[col] - 1] = col - 1;
  return assignment;
}

double purity(std::span<const std::size_t> assignments, std::span<const int> labels) {
  const ContingencyTable table(assignments, labels);
  std::int64_t correct = 0;
  for (std::size_t k = 0; k < table.clusters(); ++k) {
    std::int64_t best = 0;
    for (std::size_t j = 0; j < table.classes(); ++j) best = std::max(best, table(k, j));
    correct += best;
  }
  return static_cast<double>(correct) / static_cast<double>(table.total());
}

double clustering_accuracy(std::span<const std::size_t> assignments, std::span<const int> labels) {
  const ContingencyTable table(assignments, labels);
  const std::size_t n = std::max(table.clusters(), table.classes());
  std::vector<std::int64_t> square(n * n, 0);
  for (std::size_t k = 0; k < table.clusters(); ++k) {
    for (std::size_t j = 0; j < table.classes(); ++j) square[k * n + j] = table(k, j);
  }
  const std::vector<std::size_t> mapping = max_weight_assignment(square, n);
  std::int64_t correct = 0;
  for (std::size_t k = 0; k < n; ++k) correct += square[k * n + mapping[k]];
  return static_cast<double>(correct) / static_cast<double>(table.total());
}

std::vector<std::size_t> class_group_counts(const MapGrid& grid, std::span<const std::size_t> bmus,
                                            std::span<const int> labels) {
  check_lengths(bmus, labels);
  const std::size_t units = grid.size();
  const std::size_t classes = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
  for (std::size_t b : bmus) {
    if (b >= units) throw DomainError("BMU index " + std::to_string(b) + " outside the map");
  }

  std::vector<std::vector<std::size_t>> adjacency(units);
  for (std::size_t k = 0; k < units; ++k) adjacency[k] = grid.neighbors(k);

  std::vector<std::size_t> groups(classes, 0);
  std::vector<std::uint8_t> marked(units);
  std::vector<std::uint8_t> seen(units);
  std::vector<std::size_t> stack;
  for (std::size_t cls = 0; cls < classes; ++cls) {
    std::fill(marked.begin(), marked.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < bmus.size(); ++i) {
      if (static_cast<std::size_t>(labels[i]) == cls) marked[bmus[i]] = 1;
    }
    for (std::size_t start = 0; start < units; ++start) {
      if (!marked[start] || seen[start]) continue;
      ++groups[cls];
      seen[start] = 1;
      stack.assign(1, start);
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adjacency[u]) {
          if (marked[v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
        }
      }
    }
  }
  return groups;
}

double class_scatter_index(const MapGrid& grid, std::span<const std::size_t> bmus,
                           std::span<const int> labels) {
  const std::vector<std::size_t> groups = class_group_counts(grid, bmus, labels);
  std::size_t present = 0;
  std::size_t total = 0;
  for (std::size_t g : groups) {
    // A class with samples always occupies at least one unit.
    if (g > 0) {
      ++present;
      total += g;
    }
  }
  return static_cast<double>(total) / static_cast<double>(present);
}

double class_scatter_index(const CodeBook& codebook, const Dataset& data) {
  if (!data.has_labels()) throw DomainError("class scatter index needs labels");
  const std::vector<std::size_t> bmus = project(codebook, data, 1).bmus();
  return class_scatter_index(codebook.grid(), bmus, data.labels());
}

}  // namespace somq
