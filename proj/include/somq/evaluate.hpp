#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "somq/errors.hpp"
#include "somq/map_geometry.hpp"
#include "somq/metrics_internal.hpp"
#include "somq/som_model.hpp"

namespace somq {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(std::string_view name);

/// Every metric name `evaluate` understands, in report order.
std::span<const std::string_view> metric_names();
bool is_external_metric(std::string_view name);

struct EvaluationConfig {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Topology topology = Topology::rectangular;
  std::vector<std::string> metrics;
  std::optional<std::size_t> k;
  std::optional<double> temperature;
  KernelKind kernel = KernelKind::gaussian;
  std::filesystem::path codebook_path;
  std::filesystem::path data_path;
  std::optional<std::filesystem::path> labels_path;
  ReportFormat format = ReportFormat::json;

  /// Throws ConfigError for unknown metric names (listing the valid ones),
  /// duplicates, external metrics without labels, NP/trustworthiness without
  /// k and distortion without a temperature. Reads no files.
  void validate() const;
};

struct MetricError {
  ErrorKind kind;
  std::string reason;
};

using MetricValue = std::variant<double, TopographicFunction, MetricError>;

struct InputFingerprint {
  std::string path;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string hash;
};

struct MetricReport {
  std::vector<std::pair<std::string, MetricValue>> metrics;
  EvaluationConfig config;
  std::optional<InputFingerprint> codebook;
  std::optional<InputFingerprint> data;
  std::optional<InputFingerprint> labels;

  bool has_errors() const noexcept;
  const MetricValue* find(std::string_view name) const noexcept;
};

/// Computes one metric by name; throws on failure.
MetricValue compute_metric(std::string_view name, const CodeBook& codebook, const Dataset& data,
                           const EvaluationConfig& config);

/// Evaluates the requested metrics on in-memory inputs. A metric that throws
/// becomes a MetricError entry; the others still run.
MetricReport evaluate(const EvaluationConfig& config, const CodeBook& codebook, const Dataset& data);

/// Validates the config, loads the input files and evaluates.
MetricReport evaluate(const EvaluationConfig& config);

std::string to_json(const MetricReport& report);
std::string to_csv(const MetricReport& report);

}  // namespace somq
