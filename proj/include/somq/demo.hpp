#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "somq/metrics_internal.hpp"
#include "somq/som_model.hpp"

namespace somq {

enum class Experiment { square, tf1d, stripe };

Experiment parse_experiment(std::string_view name);
std::string_view to_string(Experiment experiment) noexcept;

struct DemoMap {
  std::string name;
  CodeBook codebook;
  std::vector<std::pair<std::string, double>> metrics;

  /// Throws DomainError for a metric the demo did not compute.
  double metric(std::string_view metric_name) const;
};

struct DemoResult {
  Experiment experiment;
  Dataset data;
  std::vector<DemoMap> maps;
  std::optional<TopographicFunction> topographic_function;
};

/**
 * Three 10x10 maps on 5000 uniform unit-square samples.
 *
 * ordered: full schedule (T 10 -> 0.5, 20000 steps); disordered: the ordered
 * prototypes under a random unit permutation; medium: the disordered map
 * after a short small-neighborhood run (T 1.5 -> 0.5, 5000 steps), which
 * restores local but not global order. Reports TE, CE, KSE and C.
 */
DemoResult run_square_demo(std::uint64_t seed);

/// A 1x20 map trained on 3000 unit-square samples; reports the topographic function.
DemoResult run_tf1d_demo(std::uint64_t seed);

/**
 * Three scripted 20-unit chains on 2000 samples from the [0,10] x [0,2]
 * stripe: zig-zag, mild curve and straight midline. Reports QE, TE and CE.
 */
DemoResult run_stripe_demo(std::uint64_t seed);

DemoResult run_demo(Experiment experiment, std::uint64_t seed);

/// Writes SVGs, metric tables and codebooks into `outdir` (created if
/// missing). Returns the written paths. Throws IoError when not writable.
std::vector<std::filesystem::path> write_demo(const DemoResult& result, const std::filesystem::path& outdir);

}  // namespace somq
