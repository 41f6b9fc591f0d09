#include "somq/evaluate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <json.hpp>

#include "somq/io.hpp"
#include "somq/metrics_external.hpp"

namespace somq {

namespace {

constexpr std::array<std::string_view, 13> kMetricNames{
    "quantization_error",   "distortion",          "topographic_error",     "combined_error",
    "trustworthiness",      "neighborhood_preservation", "topographic_product", "topographic_function",
    "kruskal_shepard_error", "c_measure",          "purity",                "clustering_accuracy",
    "class_scatter_index",
};

std::string valid_names() {
  std::string out;
  for (std::string_view n : kMetricNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

bool needs_k(std::string_view name) { return name == "trustworthiness" || name == "neighborhood_preservation"; }

InputFingerprint fingerprint(const std::filesystem::path& path, std::size_t rows, std::size_t cols) {
  return {path.string(), rows, cols, io::file_fingerprint(path)};
}

nlohmann::ordered_json fingerprint_json(const std::optional<InputFingerprint>& f) {
  if (!f) return nullptr;
  return {{"path", f->path}, {"rows", f->rows}, {"cols", f->cols}, {"fnv1a64", f->hash}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw ConfigError("unknown report format '" + std::string(name) + "' (valid: json, csv)");
}

std::span<const std::string_view> metric_names() { return kMetricNames; }

bool is_external_metric(std::string_view name) {
  return name == "purity" || name == "clustering_accuracy" || name == "class_scatter_index";
}

void EvaluationConfig::validate() const {
  if (rows == 0 || cols == 0) throw ConfigError("map rows and cols must be positive");
  if (metrics.empty()) throw ConfigError("no metrics requested (valid: " + valid_names() + ")");
  std::set<std::string_view> seen;
  for (const std::string& name : metrics) {
    if (std::find(kMetricNames.begin(), kMetricNames.end(), name) == kMetricNames.end()) {
      throw ConfigError("unknown metric '" + name + "' (valid: " + valid_names() + ")");
    }
    if (!seen.insert(name).second) throw ConfigError("metric '" + name + "' requested twice");
    if (is_external_metric(name) && !labels_path) {
      throw ConfigError("metric '" + name + "' needs a labels file (--labels)");
    }
    if (needs_k(name) && !k) throw ConfigError("metric '" + name + "' needs a neighborhood order (--k)");
    if (name == "distortion" && !temperature) {
      throw ConfigError("metric 'distortion' needs a temperature (--temperature)");
    }
  }
}

bool MetricReport::has_errors() const noexcept {
  return std::any_of(metrics.begin(), metrics.end(),
                     [](const auto& m) { return std::holds_alternative<MetricError>(m.second); });
}

const MetricValue* MetricReport::find(std::string_view name) const noexcept {
  for (const auto& [n, v] : metrics) {
    if (n == name) return &v;
  }
  return nullptr;
}

MetricValue compute_metric(std::string_view name, const CodeBook& codebook, const Dataset& data,
                           const EvaluationConfig& config) {
  if (name == "quantization_error") return quantization_error(codebook, data);
  if (name == "distortion") return distortion(codebook, data, config.kernel, config.temperature.value());
  if (name == "topographic_error") return topographic_error(codebook, data);
  if (name == "combined_error") return combined_error(codebook, data);
  if (name == "trustworthiness") return trustworthiness(codebook, data, config.k.value());
  if (name == "neighborhood_preservation") return neighborhood_preservation(codebook, data, config.k.value());
  if (name == "topographic_product") return topographic_product(codebook);
  if (name == "topographic_function") return topographic_function(codebook, data);
  if (name == "kruskal_shepard_error") return kruskal_shepard_error(codebook, data);
  if (name == "c_measure") return c_measure(codebook, data);
  if (name == "class_scatter_index") return class_scatter_index(codebook, data);
  if (name == "purity" || name == "clustering_accuracy") {
    const std::vector<std::size_t> bmus = project(codebook, data, 1).bmus();
    return name == "purity" ? purity(bmus, data.labels()) : clustering_accuracy(bmus, data.labels());
  }
  throw ConfigError("unknown metric '" + std::string(name) + "' (valid: " + valid_names() + ")");
}

MetricReport evaluate(const EvaluationConfig& config, const CodeBook& codebook, const Dataset& data) {
  config.validate();
  check_compatible(codebook, data);
  MetricReport report;
  report.config = config;
  for (const std::string& name : config.metrics) {
    MetricValue value;
    try {
      value = compute_metric(name, codebook, data, config);
      if (const double* v = std::get_if<double>(&value); v && !std::isfinite(*v)) {
        value = MetricError{ErrorKind::domain, "metric evaluated to a non-finite value"};
      }
    } catch (const Error& e) {
      value = MetricError{e.kind(), e.what()};
    }
    report.metrics.emplace_back(name, std::move(value));
  }
  return report;
}

MetricReport evaluate(const EvaluationConfig& config) {
  config.validate();
  const MapGrid grid(config.rows, config.cols, config.topology);
  const Matrix protos = io::read_matrix_csv(config.codebook_path);
  const Matrix samples = io::read_matrix_csv(config.data_path);
  std::optional<std::vector<int>> labels;
  if (config.labels_path) labels = io::read_labels(*config.labels_path);

  if (protos.rows() != grid.size()) {
    throw ShapeError("codebook " + config.codebook_path.string() + " has " + std::to_string(protos.rows()) +
                     " rows but a " + std::to_string(config.rows) + "x" + std::to_string(config.cols) +
                     " map has " + std::to_string(grid.size()) + " units");
  }
  if (protos.cols() != samples.cols()) {
    throw ShapeError("codebook " + config.codebook_path.string() + " has dimension " +
                     std::to_string(protos.cols()) + " but data " + config.data_path.string() + " has dimension " +
                     std::to_string(samples.cols()));
  }
  if (labels && labels->size() != samples.rows()) {
    throw ShapeError("labels " + config.labels_path->string() + " has " + std::to_string(labels->size()) +
                     " entries but data " + config.data_path.string() + " has " + std::to_string(samples.rows()) +
                     " rows");
  }
  if (!protos.all_finite()) throw InputError(config.codebook_path.string() + ": non-finite value");
  if (!samples.all_finite()) throw InputError(config.data_path.string() + ": non-finite value");

  const CodeBook codebook(protos, grid);
  const Dataset data(samples, std::move(labels));
  MetricReport report = evaluate(config, codebook, data);
  report.codebook = fingerprint(config.codebook_path, protos.rows(), protos.cols());
  report.data = fingerprint(config.data_path, samples.rows(), samples.cols());
  if (config.labels_path) report.labels = fingerprint(*config.labels_path, samples.rows(), 1);
  return report;
}

std::string to_json(const MetricReport& report) {
  using json = nlohmann::ordered_json;
  json metrics = json::object();
  for (const auto& [name, value] : report.metrics) {
    if (const double* v = std::get_if<double>(&value)) {
      metrics[name] = *v;
    } else if (const auto* tf = std::get_if<TopographicFunction>(&value)) {
      metrics[name] = {{"k", tf->order},
                       {"values", tf->values},
                       {"normalized_k", tf->normalized_order},
                       {"normalized_values", tf->normalized_values}};
    } else {
      const auto& err = std::get<MetricError>(value);
      metrics[name] = {{"error", to_string(err.kind)}, {"reason", err.reason}};
    }
  }
  const EvaluationConfig& c = report.config;
  json params = {{"rows", c.rows},
                 {"cols", c.cols},
                 {"topology", to_string(c.topology)},
                 {"metrics", c.metrics},
                 {"k", c.k ? json(*c.k) : json(nullptr)},
                 {"temperature", c.temperature ? json(*c.temperature) : json(nullptr)},
                 {"kernel", to_string(c.kernel)}};
  json inputs = {{"codebook", fingerprint_json(report.codebook)},
                 {"data", fingerprint_json(report.data)},
                 {"labels", fingerprint_json(report.labels)}};
  json doc = {{"metrics", metrics}, {"params", params}, {"inputs", inputs}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const MetricReport& report) {
  std::string out = "metric,value\n";
  for (const auto& [name, value] : report.metrics) {
    if (const double* v = std::get_if<double>(&value)) {
      out += name + "," + io::format_number(*v) + "\n";
    } else if (const auto* tf = std::get_if<TopographicFunction>(&value)) {
      for (std::size_t i = 0; i < tf->order.size(); ++i) {
        out += name + "[" + std::to_string(tf->order[i]) + "]," + std::to_string(tf->values[i]) + "\n";
      }
      for (std::size_t i = 0; i < tf->normalized_values.size(); ++i) {
        out += name + "_normalized[" + io::format_number(tf->normalized_order[i]) + "]," +
               io::format_number(tf->normalized_values[i]) + "\n";
      }
    } else {
      const auto& err = std::get<MetricError>(value);
      out += name + "," + csv_quote("error: " + std::string(to_string(err.kind)) + ": " + err.reason) + "\n";
    }
  }
  return out;
}

}  // namespace somq
