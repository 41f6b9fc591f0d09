#include "somq/som_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "somq/errors.hpp"

namespace somq {

CodeBook::CodeBook(Matrix prototypes, MapGrid grid) : prototypes_(std::move(prototypes)), grid_(grid) {
  if (prototypes_.rows() != grid_.size()) {
    throw ShapeError("codebook has " + std::to_string(prototypes_.rows()) + " rows but the " +
                     std::to_string(grid_.rows()) + "x" + std::to_string(grid_.cols()) +
                     " grid has " + std::to_string(grid_.size()) + " units");
  }
  if (prototypes_.cols() == 0) throw ShapeError("codebook prototypes have zero dimension");
  if (!prototypes_.all_finite()) throw DomainError("codebook contains non-finite values");
}

Dataset::Dataset(Matrix samples, std::optional<std::vector<int>> labels)
    : samples_(std::move(samples)), labels_(std::move(labels)) {
  if (samples_.rows() == 0) throw DomainError("dataset is empty");
  if (!samples_.all_finite()) throw DomainError("dataset contains non-finite values");
  if (labels_) {
    if (labels_->size() != samples_.rows()) {
      throw ShapeError("label count " + std::to_string(labels_->size()) +
                       " does not match sample count " + std::to_string(samples_.rows()));
    }
    for (int label : *labels_) {
      if (label < 0) throw DomainError("class labels must be nonnegative, got " + std::to_string(label));
    }
  }
}

const std::vector<int>& Dataset::labels() const {
  if (!labels_) throw DomainError("dataset has no labels");
  return *labels_;
}

std::size_t Dataset::class_count() const noexcept {
  if (!labels_) return 0;
  return static_cast<std::size_t>(*std::max_element(labels_->begin(), labels_->end())) + 1;
}

ProjectionIndex::ProjectionIndex(std::size_t samples, std::size_t depth, std::vector<std::size_t> ranks)
    : samples_(samples), depth_(depth), ranks_(std::move(ranks)) {}

std::vector<std::size_t> ProjectionIndex::bmus() const {
  std::vector<std::size_t> out(samples_);
  for (std::size_t i = 0; i < samples_; ++i) out[i] = bmu(i);
  return out;
}

void check_compatible(const CodeBook& codebook, const Dataset& data) {
  if (codebook.dim() != data.dim()) {
    throw ShapeError("codebook dimension " + std::to_string(codebook.dim()) +
                     " does not match data dimension " + std::to_string(data.dim()));
  }
}

ProjectionIndex project(const CodeBook& codebook, const Dataset& data, std::size_t depth) {
  check_compatible(codebook, data);
  const std::size_t units = codebook.units();
  if (depth < 1 || depth > units) {
    throw DomainError("projection depth " + std::to_string(depth) + " outside 1.." +
                      std::to_string(units));
  }
  std::vector<std::size_t> ranks(data.size() * depth);
  std::vector<double> dist(units);
  std::vector<std::size_t> order(units);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto x = data.sample(i);
    for (std::size_t k = 0; k < units; ++k) dist[k] = squared_distance(x, codebook.prototype(k));
    std::size_t* out = ranks.data() + i * depth;
    if (depth == 1) {
      // Strict < keeps the first (lowest) index on ties.
      std::size_t best = 0;
      for (std::size_t k = 1; k < units; ++k) {
        if (dist[k] < dist[best]) best = k;
      }
      out[0] = best;
      continue;
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(depth), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
                      });
    std::copy_n(order.begin(), depth, out);
  }
  return ProjectionIndex(data.size(), depth, std::move(ranks));
}

Connectivity receptive_field_connectivity(const CodeBook& codebook, const Dataset& data) {
  if (codebook.units() < 2) {
    throw DegenerateGridError("receptive-field connectivity needs at least two units");
  }
  const ProjectionIndex proj = project(codebook, data, 2);
  Connectivity conn(codebook.units());
  for (std::size_t i = 0; i < proj.samples(); ++i) conn.connect(proj.unit(i, 0), proj.unit(i, 1));
  return conn;
}

void TrainerConfig::validate() const {
  if (rows == 0 || cols == 0) throw DomainError("trainer map size must be positive");
  if (!(t_min > 0.0)) throw DomainError("t_min must be positive");
  if (!(t_max >= t_min)) throw DomainError("t_max must be at least t_min");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("learning rate must be positive");
  if (iterations == 0) throw DomainError("iterations must be at least 1");
}

CodeBook init_codebook(const Dataset& data, const MapGrid& grid, std::mt19937_64& rng) {
  const std::size_t n = data.size();
  const std::size_t units = grid.size();
  Matrix protos(units, data.dim());
  if (n >= units) {
    // Partial Fisher-Yates over sample indices.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t k = 0; k < units; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, n - 1);
      std::swap(idx[k], idx[pick(rng)]);
      std::ranges::copy(data.sample(idx[k]), protos.row(k).begin());
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < units; ++k) std::ranges::copy(data.sample(pick(rng)), protos.row(k).begin());
  }
  return CodeBook(std::move(protos), grid);
}

CodeBook init_codebook(const Dataset& data, const MapGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return init_codebook(data, grid, rng);
}

namespace {

void run_updates(const Dataset& data, CodeBook& codebook, const TrainerConfig& config,
                 std::mt19937_64& rng) {
  const DistanceTable delta(codebook.grid());
  const std::size_t units = codebook.units();
  const std::size_t dim = codebook.dim();
  Matrix& protos = codebook.prototypes();
  std::uniform_int_distribution<std::size_t> pick(0, data.size() - 1);
  const double ratio = config.t_min / config.t_max;
  const auto total = static_cast<double>(config.iterations);

  for (std::size_t n = 1; n <= config.iterations; ++n) {
    const double temperature = config.t_max * std::pow(ratio, static_cast<double>(n) / total);
    const double rate = config.alpha * (1.0 - static_cast<double>(n - 1) / total);
    const auto x = data.sample(pick(rng));

    std::size_t bmu = 0;
    double best = squared_distance(x, protos.row(0));
    for (std::size_t k = 1; k < units; ++k) {
      const double d = squared_distance(x, protos.row(k));
      if (d < best) {
        best = d;
        bmu = k;
      }
    }
    for (std::size_t k = 0; k < units; ++k) {
      const double step =
          rate * kernel_weight(config.kernel, static_cast<double>(delta(bmu, k)), temperature);
      if (step == 0.0) continue;
      auto m = protos.row(k);
      for (std::size_t c = 0; c < dim; ++c) m[c] += step * (x[c] - m[c]);
    }
  }
}

}  // namespace

CodeBook train_som(const Dataset& data, const TrainerConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  CodeBook codebook = init_codebook(data, MapGrid(config.rows, config.cols, config.topology), rng);
  run_updates(data, codebook, config, rng);
  return codebook;
}

CodeBook train_som(const Dataset& data, CodeBook initial, const TrainerConfig& config) {
  config.validate();
  check_compatible(initial, data);
  if (!(initial.grid() == MapGrid(config.rows, config.cols, config.topology))) {
    throw ShapeError("initial codebook grid does not match the trainer map size");
  }
  std::mt19937_64 rng(config.seed);
  run_updates(data, initial, config, rng);
  return initial;
}

}  // namespace somq
