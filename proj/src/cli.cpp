#include "somq/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "somq/demo.hpp"
#include "somq/evaluate.hpp"
#include "somq/io.hpp"

namespace somq {

namespace {

struct EvaluateArgs {
  std::string codebook;
  std::string data;
  std::string labels;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string topology = "rectangular";
  std::vector<std::string> metrics;
  std::optional<std::size_t> k;
  std::optional<double> temperature;
  std::string kernel = "gaussian";
  std::string format = "json";
  std::string out;
};

struct TrainArgs {
  std::string data;
  TrainerConfig config;
  std::string topology = "rectangular";
  std::string kernel = "gaussian";
  std::string out;
};

struct DemoArgs {
  std::string experiment;
  std::string outdir;
  std::uint64_t seed = 1;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

void report_error(std::ostream& err, std::string_view kind, const std::string& reason) {
  err << "somq: error[" << kind << "]: " << one_line(reason) << '\n';
}

Matrix load_samples(const std::filesystem::path& path) {
  Matrix m = io::read_matrix_csv(path);
  if (m.empty()) throw InputError(path.string() + ": no data rows");
  if (!m.all_finite()) throw InputError(path.string() + ": non-finite value");
  return m;
}

int run_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  EvaluationConfig config;
  config.rows = a.rows;
  config.cols = a.cols;
  config.topology = parse_topology(a.topology);
  config.metrics = a.metrics;
  config.k = a.k;
  config.temperature = a.temperature;
  config.kernel = parse_kernel(a.kernel);
  config.codebook_path = a.codebook;
  config.data_path = a.data;
  if (!a.labels.empty()) config.labels_path = a.labels;
  config.format = parse_report_format(a.format);

  const MetricReport report = evaluate(config);
  const std::string text = config.format == ReportFormat::json ? to_json(report) : to_csv(report);
  if (a.out.empty()) {
    out << text;
  } else {
    io::write_text(a.out, text);
  }
  for (const auto& [name, value] : report.metrics) {
    if (const auto* e = std::get_if<MetricError>(&value)) {
      report_error(err, to_string(e->kind), "metric '" + name + "': " + e->reason);
      return exit_code(e->kind);
    }
  }
  return 0;
}

int run_train(TrainArgs a, std::ostream& out) {
  a.config.topology = parse_topology(a.topology);
  a.config.kernel = parse_kernel(a.kernel);
  try {
    a.config.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const Dataset data(load_samples(a.data));
  const CodeBook codebook = train_som(data, a.config);
  io::write_matrix_csv(a.out, codebook.prototypes());
  out << a.out << '\n';
  return 0;
}

int run_demo_command(const DemoArgs& a, std::ostream& out) {
  const Experiment experiment = parse_experiment(a.experiment);
  const DemoResult result = run_demo(experiment, a.seed);
  for (const auto& path : write_demo(result, a.outdir)) out << path.string() << '\n';
  return 0;
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input:
    case ErrorKind::shape:
    case ErrorKind::io: return 1;
    case ErrorKind::config: return 2;
    case ErrorKind::domain:
    case ErrorKind::degenerate_grid:
    case ErrorKind::degenerate_codebook:
    case ErrorKind::degenerate_data: return 3;
  }
  return 3;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SOM quality metrics", "somq"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "Compute quality metrics of a trained map");
  evaluate_cmd->add_option("--codebook", ev.codebook, "Codebook CSV, one prototype per row (row-major units)")
      ->required();
  evaluate_cmd->add_option("--data", ev.data, "Data CSV, one sample per row")->required();
  evaluate_cmd->add_option("--labels", ev.labels, "Class labels, one integer per line");
  evaluate_cmd->add_option("--rows", ev.rows, "Map rows")->required();
  evaluate_cmd->add_option("--cols", ev.cols, "Map columns")->required();
  evaluate_cmd->add_option("--topology", ev.topology, "rectangular or hexagonal")->capture_default_str();
  evaluate_cmd->add_option("--metrics", ev.metrics, "Comma-separated metric names")->required()->delimiter(',');
  evaluate_cmd->add_option("--k", ev.k, "Neighborhood size for trustworthiness / neighborhood preservation");
  evaluate_cmd->add_option("--temperature", ev.temperature, "Kernel temperature for distortion");
  evaluate_cmd->add_option("--kernel", ev.kernel, "gaussian or window")->capture_default_str();
  evaluate_cmd->add_option("--format", ev.format, "json or csv")->capture_default_str();
  evaluate_cmd->add_option("--out", ev.out, "Report path (default: standard output)");

  TrainArgs tr;
  CLI::App* train_cmd = app.add_subcommand("train", "Train a map with the stochastic SOM algorithm");
  train_cmd->add_option("--data", tr.data, "Data CSV, one sample per row")->required();
  train_cmd->add_option("--rows", tr.config.rows, "Map rows")->capture_default_str();
  train_cmd->add_option("--cols", tr.config.cols, "Map columns")->capture_default_str();
  train_cmd->add_option("--topology", tr.topology, "rectangular or hexagonal")->capture_default_str();
  train_cmd->add_option("--tmax", tr.config.t_max, "Initial temperature")->capture_default_str();
  train_cmd->add_option("--tmin", tr.config.t_min, "Final temperature")->capture_default_str();
  train_cmd->add_option("--alpha", tr.config.alpha, "Initial learning rate")->capture_default_str();
  train_cmd->add_option("--iters", tr.config.iterations, "Number of updates")->capture_default_str();
  train_cmd->add_option("--seed", tr.config.seed, "Random seed")->capture_default_str();
  train_cmd->add_option("--kernel", tr.kernel, "gaussian or window")->capture_default_str();
  train_cmd->add_option("--out", tr.out, "Output codebook CSV")->required();

  DemoArgs dm;
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run a reference experiment and write its figures");
  demo_cmd->add_option("--experiment", dm.experiment, "square, tf1d or stripe")->required();
  demo_cmd->add_option("--outdir", dm.outdir, "Output directory")->required();
  demo_cmd->add_option("--seed", dm.seed, "Random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorKind::config), e.what());
    return exit_code(ErrorKind::config);
  }

  try {
    if (evaluate_cmd->parsed()) return run_evaluate(ev, out, err);
    if (train_cmd->parsed()) return run_train(tr, out);
    return run_demo_command(dm, out);
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return 3;
  }
}

}  // namespace somq
