#include "somq/metrics_internal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>

#include "somq/errors.hpp"

namespace somq {

namespace {

void require_two_units(const CodeBook& codebook, const char* metric) {
  if (codebook.units() < 2) {
    throw DegenerateGridError(std::string(metric) + " needs a map with at least two units");
  }
}

// Min-ranks of `keys` (self excluded): rank[j] = #{l != self : key[l] < key[j]} + 1.
template <typename Key>
void min_ranks(const std::vector<Key>& keys, std::size_t self, std::vector<std::size_t>& order,
               std::vector<std::size_t>& rank) {
  const std::size_t n = keys.size();
  order.clear();
  for (std::size_t j = 0; j < n; ++j) {
    if (j != self) order.push_back(j);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b] || (keys[a] == keys[b] && a < b);
  });
  rank.assign(n, 0);
  std::size_t group_start = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && keys[order[pos]] != keys[order[pos - 1]]) group_start = pos;
    rank[order[pos]] = group_start + 1;
  }
}

struct RankPenalties {
  double trust = 0.0;
  double preservation = 0.0;
};

RankPenalties rank_penalties(const CodeBook& codebook, const Dataset& data, std::size_t k) {
  check_compatible(codebook, data);
  const std::size_t n = data.size();
  if (n < 3) throw DomainError("neighborhood metrics need at least 3 samples");
  if (k < 1 || 2 * k >= n) {
    throw DomainError("neighborhood order k = " + std::to_string(k) + " must satisfy 1 <= k < N/2 (N = " +
                      std::to_string(n) + ")");
  }
  const std::vector<std::size_t> bmu = project(codebook, data, 1).bmus();
  const DistanceTable delta(codebook.grid());

  std::vector<double> input_dist(n);
  std::vector<std::size_t> map_dist(n);
  std::vector<std::size_t> order;
  std::vector<std::size_t> input_rank;
  std::vector<std::size_t> map_rank;
  RankPenalties total;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      input_dist[j] = squared_distance(data.sample(i), data.sample(j));
      map_dist[j] = delta(bmu[i], bmu[j]);
    }
    min_ranks(input_dist, i, order, input_rank);
    min_ranks(map_dist, i, order, map_rank);

    std::size_t input_size = 0;
    std::size_t map_size = 0;
    double trust_sum = 0.0;
    double preserve_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool in_input = input_rank[j] <= k;
      const bool in_map = map_rank[j] <= k;
      input_size += in_input;
      map_size += in_map;
      if (in_map && !in_input) trust_sum += static_cast<double>(input_rank[j] - k);
      if (in_input && !in_map) preserve_sum += static_cast<double>(map_rank[j] - k);
    }
    const double ratio = static_cast<double>(input_size) / static_cast<double>(map_size);
    total.trust += ratio * trust_sum;
    total.preservation += preserve_sum / ratio;
  }
  return total;
}

double rank_normalizer(std::size_t n, std::size_t k) {
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  return 2.0 / (nn * kk * (2.0 * nn - 3.0 * kk - 1.0));
}

}  // namespace

double quantization_error(const CodeBook& codebook, const Dataset& data) {
  const ProjectionIndex proj = project(codebook, data, 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    sum += euclidean_distance(data.sample(i), codebook.prototype(proj.bmu(i)));
  }
  return sum / static_cast<double>(data.size());
}

double distortion(const CodeBook& codebook, const Dataset& data, KernelKind kernel, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("distortion temperature must be positive");
  const ProjectionIndex proj = project(codebook, data, 1);
  const DistanceTable delta(codebook.grid());
  const std::size_t units = codebook.units();

  // Weights depend only on the map distance, which is bounded by delta.max().
  std::vector<double> weight(delta.max() + 1);
  for (std::size_t d = 0; d < weight.size(); ++d) {
    weight[d] = kernel_weight(kernel, static_cast<double>(d), temperature);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t b = proj.bmu(i);
    for (std::size_t k = 0; k < units; ++k) {
      const double w = weight[delta(b, k)];
      if (w != 0.0) sum += w * squared_distance(data.sample(i), codebook.prototype(k));
    }
  }
  return sum / static_cast<double>(data.size());
}

double topographic_error(const CodeBook& codebook, const Dataset& data) {
  require_two_units(codebook, "topographic error");
  const ProjectionIndex proj = project(codebook, data, 2);
  const MapGrid& grid = codebook.grid();
  std::size_t errors = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (grid.distance(proj.unit(i, 0), proj.unit(i, 1)) > 1) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(data.size());
}

std::vector<double> map_path_costs(const CodeBook& codebook, std::size_t source) {
  const MapGrid& grid = codebook.grid();
  const std::size_t units = codebook.units();
  if (source >= units) throw DomainError("path source unit out of range");

  std::vector<double> cost(units, std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  cost[source] = 0.0;
  frontier.emplace(0.0, source);
  while (!frontier.empty()) {
    const auto [c, u] = frontier.top();
    frontier.pop();
    if (c > cost[u]) continue;
    for (std::size_t v : grid.neighbors(u)) {
      const double next = c + squared_distance(codebook.prototype(u), codebook.prototype(v));
      if (next < cost[v]) {
        cost[v] = next;
        frontier.emplace(next, v);
      }
    }
  }
  return cost;
}

double combined_error(const CodeBook& codebook, const Dataset& data) {
  require_two_units(codebook, "combined error");
  const ProjectionIndex proj = project(codebook, data, 2);
  std::unordered_map<std::size_t, std::vector<double>> paths;
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t b1 = proj.unit(i, 0);
    const std::size_t b2 = proj.unit(i, 1);
    auto it = paths.find(b1);
    if (it == paths.end()) it = paths.emplace(b1, map_path_costs(codebook, b1)).first;
    sum += squared_distance(data.sample(i), codebook.prototype(b1)) + it->second[b2];
  }
  return sum / static_cast<double>(data.size());
}

double trustworthiness(const CodeBook& codebook, const Dataset& data, std::size_t k) {
  const RankPenalties p = rank_penalties(codebook, data, k);
  return 1.0 - rank_normalizer(data.size(), k) * p.trust;
}

double neighborhood_preservation(const CodeBook& codebook, const Dataset& data, std::size_t k) {
  const RankPenalties p = rank_penalties(codebook, data, k);
  return 1.0 - rank_normalizer(data.size(), k) * p.preservation;
}

double topographic_product(const CodeBook& codebook) {
  require_two_units(codebook, "topographic product");
  const std::size_t units = codebook.units();
  const DistanceTable delta(codebook.grid());

  Matrix sq(units, units);
  for (std::size_t a = 0; a < units; ++a) {
    for (std::size_t b = a + 1; b < units; ++b) {
      const double d = squared_distance(codebook.prototype(a), codebook.prototype(b));
      if (d == 0.0) {
        throw DegenerateCodebookError("prototypes of units " + std::to_string(a) + " and " +
                                      std::to_string(b) + " coincide");
      }
      sq(a, b) = d;
      sq(b, a) = d;
    }
  }

  std::vector<std::size_t> by_map;
  std::vector<std::size_t> by_input;
  double total = 0.0;
  for (std::size_t j = 0; j < units; ++j) {
    by_map.clear();
    for (std::size_t l = 0; l < units; ++l) {
      if (l != j) by_map.push_back(l);
    }
    by_input = by_map;
    std::stable_sort(by_map.begin(), by_map.end(),
                     [&](std::size_t a, std::size_t b) { return delta(j, a) < delta(j, b); });
    std::stable_sort(by_input.begin(), by_input.end(),
                     [&](std::size_t a, std::size_t b) { return sq(j, a) < sq(j, b); });

    double log_sum = 0.0;
    for (std::size_t k = 1; k < units; ++k) {
      const std::size_t nm = by_map[k - 1];
      const std::size_t ni = by_input[k - 1];
      const double q1 = std::sqrt(sq(j, nm) / sq(j, ni));
      const double q2 = static_cast<double>(delta(j, nm)) / static_cast<double>(delta(j, ni));
      log_sum += std::log(q1) + std::log(q2);
      total += log_sum / (2.0 * static_cast<double>(k));
    }
  }
  return total / (static_cast<double>(units) * static_cast<double>(units - 1));
}

std::size_t topographic_function_value(const Connectivity& connectivity, const MapGrid& grid,
                                       std::size_t k) {
  std::size_t count = 0;
  for (std::size_t c = 0; c < connectivity.units(); ++c) {
    for (std::size_t other = 0; other < connectivity.units(); ++other) {
      if (connectivity(c, other) && grid.distance(c, other) > k) ++count;
    }
  }
  return count;
}

TopographicFunction topographic_function(const CodeBook& codebook, const Dataset& data) {
  require_two_units(codebook, "topographic function");
  const Connectivity conn = receptive_field_connectivity(codebook, data);
  const MapGrid& grid = codebook.grid();
  const DistanceTable delta(grid);
  const std::size_t units = codebook.units();
  const std::size_t max_d = delta.max();

  // Histogram of connected ordered pairs by map distance, then suffix sums.
  std::vector<std::size_t> at_distance(max_d + 1, 0);
  for (std::size_t c = 0; c < units; ++c) {
    for (std::size_t other = 0; other < units; ++other) {
      if (conn(c, other)) ++at_distance[delta(c, other)];
    }
  }
  TopographicFunction tf;
  const double k_units = static_cast<double>(units);
  const double neighborhood = std::pow(3.0, grid.dimensionality());
  const double denom = k_units * (k_units - neighborhood);
  std::size_t beyond = 0;
  std::vector<std::size_t> suffix(max_d + 2, 0);
  for (std::size_t d = max_d + 1; d-- > 0;) {
    beyond += at_distance[d];
    suffix[d] = beyond;
  }
  for (std::size_t k = 1; k <= max_d; ++k) {
    const std::size_t value = suffix[k + 1];
    tf.order.push_back(k);
    tf.values.push_back(value);
    tf.normalized_order.push_back(static_cast<double>(k) / static_cast<double>(max_d));
    if (denom > 0.0) tf.normalized_values.push_back(static_cast<double>(value) / denom);
  }
  return tf;
}

double kruskal_shepard_error(const CodeBook& codebook, const Dataset& data) {
  require_two_units(codebook, "Kruskal-Shepard error");
  const std::size_t n = data.size();
  if (n < 2) throw DegenerateDataError("Kruskal-Shepard error needs at least two samples");
  const std::vector<std::size_t> bmu = project(codebook, data, 1).bmus();
  const DistanceTable delta(codebook.grid());

  double max_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) max_sq = std::max(max_sq, squared_distance(data.sample(i), data.sample(j)));
  }
  if (max_sq == 0.0) throw DegenerateDataError("all samples are identical");
  const auto max_map = static_cast<double>(delta.max());

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = squared_distance(data.sample(i), data.sample(j)) / max_sq;
      const double ds = static_cast<double>(delta(bmu[i], bmu[j])) / max_map;
      sum += (dx - ds) * (dx - ds);
    }
  }
  // Each off-diagonal pair appears twice in the full matrix.
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double c_measure(const CodeBook& codebook, const Dataset& data) {
  const std::vector<std::size_t> bmu = project(codebook, data, 1).bmus();
  const DistanceTable delta(codebook.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t d = delta(bmu[i], bmu[j]);
      if (d != 0) sum += euclidean_distance(data.sample(i), data.sample(j)) * static_cast<double>(d);
    }
  }
  return sum;
}

}  // namespace somq
