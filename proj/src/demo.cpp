#include "somq/demo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <system_error>

#include "somq/errors.hpp"
#include "somq/io.hpp"
#include "somq/svg.hpp"

namespace somq {

namespace {

Matrix uniform_samples(std::size_t n, double width, double height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, width);
  std::uniform_real_distribution<double> uy(0.0, height);
  Matrix m(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = ux(rng);
    m(i, 1) = uy(rng);
  }
  return m;
}

DemoMap square_entry(std::string name, CodeBook codebook, const Dataset& data) {
  DemoMap map{std::move(name), std::move(codebook), {}};
  map.metrics = {{"topographic_error", topographic_error(map.codebook, data)},
                 {"combined_error", combined_error(map.codebook, data)},
                 {"kruskal_shepard_error", kruskal_shepard_error(map.codebook, data)},
                 {"c_measure", c_measure(map.codebook, data)}};
  return map;
}

DemoMap stripe_entry(std::string name, Matrix protos, const Dataset& data) {
  CodeBook codebook(std::move(protos), MapGrid(1, 20, Topology::rectangular));
  DemoMap map{std::move(name), std::move(codebook), {}};
  map.metrics = {{"quantization_error", quantization_error(map.codebook, data)},
                 {"topographic_error", topographic_error(map.codebook, data)},
                 {"combined_error", combined_error(map.codebook, data)}};
  return map;
}

std::string metric_table(const DemoResult& result) {
  std::string out = "map";
  for (const auto& [name, value] : result.maps.front().metrics) out += "," + name;
  out += "\n";
  for (const DemoMap& map : result.maps) {
    out += map.name;
    for (const auto& [name, value] : map.metrics) out += "," + io::format_number(value);
    out += "\n";
  }
  return out;
}

}  // namespace

Experiment parse_experiment(std::string_view name) {
  if (name == "square") return Experiment::square;
  if (name == "tf1d") return Experiment::tf1d;
  if (name == "stripe") return Experiment::stripe;
  throw ConfigError("unknown experiment '" + std::string(name) + "' (valid: square, tf1d, stripe)");
}

std::string_view to_string(Experiment experiment) noexcept {
  switch (experiment) {
    case Experiment::square: return "square";
    case Experiment::tf1d: return "tf1d";
    case Experiment::stripe: return "stripe";
  }
  return "square";
}

double DemoMap::metric(std::string_view metric_name) const {
  for (const auto& [name, value] : metrics) {
    if (name == metric_name) return value;
  }
  throw DomainError("demo map '" + name + "' has no metric '" + std::string(metric_name) + "'");
}

DemoResult run_square_demo(std::uint64_t seed) {
  Dataset data(uniform_samples(5000, 1.0, 1.0, seed));

  TrainerConfig ordered_cfg;
  ordered_cfg.t_max = 10.0;
  ordered_cfg.t_min = 0.5;
  ordered_cfg.iterations = 20000;
  ordered_cfg.seed = seed + 1;
  CodeBook ordered = train_som(data, ordered_cfg);

  std::vector<std::size_t> perm(ordered.units());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::mt19937_64 rng(seed + 3);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix shuffled(ordered.units(), ordered.dim());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    std::ranges::copy(ordered.prototype(perm[k]), shuffled.row(k).begin());
  }
  CodeBook disordered(std::move(shuffled), ordered.grid());

  TrainerConfig medium_cfg = ordered_cfg;
  medium_cfg.t_max = 1.5;
  medium_cfg.iterations = 5000;
  medium_cfg.seed = seed + 2;
  CodeBook medium = train_som(data, disordered, medium_cfg);

  DemoResult result{Experiment::square, data, {}, std::nullopt};
  result.maps.push_back(square_entry("ordered", std::move(ordered), data));
  result.maps.push_back(square_entry("medium", std::move(medium), data));
  result.maps.push_back(square_entry("disordered", std::move(disordered), data));
  return result;
}

DemoResult run_tf1d_demo(std::uint64_t seed) {
  Dataset data(uniform_samples(3000, 1.0, 1.0, seed));
  TrainerConfig cfg;
  cfg.rows = 1;
  cfg.cols = 20;
  cfg.t_max = 5.0;
  cfg.t_min = 0.5;
  cfg.iterations = 20000;
  cfg.seed = seed + 1;
  CodeBook codebook = train_som(data, cfg);
  DemoResult result{Experiment::tf1d, data, {}, topographic_function(codebook, data)};
  result.maps.push_back(DemoMap{"chain", std::move(codebook), {}});
  return result;
}

DemoResult run_stripe_demo(std::uint64_t seed) {
  constexpr std::size_t kUnits = 20;
  Dataset data(uniform_samples(2000, 10.0, 2.0, seed));
  Matrix zigzag(kUnits, 2);
  Matrix curve(kUnits, 2);
  Matrix line(kUnits, 2);
  for (std::size_t k = 0; k < kUnits; ++k) {
    const double x = (static_cast<double>(k) + 0.5) * 0.5;
    zigzag(k, 0) = curve(k, 0) = line(k, 0) = x;
    zigzag(k, 1) = k % 2 == 0 ? 0.5 : 1.5;
    curve(k, 1) = 1.0 + 0.3 * std::sin(2.0 * std::numbers::pi * static_cast<double>(k) / 4.0);
    line(k, 1) = 1.0;
  }
  DemoResult result{Experiment::stripe, data, {}, std::nullopt};
  result.maps.push_back(stripe_entry("zigzag", std::move(zigzag), data));
  result.maps.push_back(stripe_entry("curve", std::move(curve), data));
  result.maps.push_back(stripe_entry("line", std::move(line), data));
  return result;
}

DemoResult run_demo(Experiment experiment, std::uint64_t seed) {
  switch (experiment) {
    case Experiment::square: return run_square_demo(seed);
    case Experiment::tf1d: return run_tf1d_demo(seed);
    case Experiment::stripe: return run_stripe_demo(seed);
  }
  throw ConfigError("unknown experiment");
}

std::vector<std::filesystem::path> write_demo(const DemoResult& result, const std::filesystem::path& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec || !std::filesystem::is_directory(outdir)) {
    throw IoError(outdir.string() + ": cannot create output directory");
  }
  const std::string prefix(to_string(result.experiment));
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& file, const std::string& text) {
    const auto path = outdir / file;
    io::write_text(path, text);
    written.push_back(path);
  };

  for (const DemoMap& map : result.maps) {
    const std::string stem = prefix + "_" + map.name;
    emit(stem + ".svg", render_map_svg(map.codebook, result.data, stem));
    const auto path = outdir / (stem + "_codebook.csv");
    io::write_matrix_csv(path, map.codebook.prototypes());
    written.push_back(path);
  }
  if (!result.maps.front().metrics.empty()) emit(prefix + "_metrics.csv", metric_table(result));

  if (const auto& tf = result.topographic_function) {
    std::string series = "k,tf\n";
    for (std::size_t i = 0; i < tf->order.size(); ++i) {
      series += std::to_string(tf->order[i]) + "," + std::to_string(tf->values[i]) + "\n";
    }
    emit(prefix + "_tf.csv", series);
    std::string normalized = "k_normalized,tf_normalized\n";
    for (std::size_t i = 0; i < tf->normalized_order.size(); ++i) {
      normalized += io::format_number(tf->normalized_order[i]) + "," +
                    io::format_number(tf->normalized_values[i]) + "\n";
    }
    emit(prefix + "_tf_normalized.csv", normalized);
  }
  const auto data_path = outdir / (prefix + "_data.csv");
  io::write_matrix_csv(data_path, result.data.samples());
  written.push_back(data_path);
  return written;
}

}  // namespace somq
