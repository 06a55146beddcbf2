// qgs: scattering sweeps, period averages and closed-form validation for
// open quantum graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgs/graph_json.hpp"
#include "qgs/presets.hpp"
#include "qgs/sweep.hpp"
#include "qgs/validate.hpp"

namespace {

// Writes to the file when a path is given, to stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw qgs::Error(qgs::ErrorCode::BadConfig, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void warn_unitarity(const qgs::OpenGraph& og) {
  for (qgs::VertexId v : og.unitarity_warnings()) {
    std::cerr << "warning: vertex " << v << " has non-unitary custom amplitudes\n";
  }
}

qgs::Family family_or_throw(const std::string& name) {
  const auto f = qgs::parse_family(name);
  if (!f) throw qgs::Error(qgs::ErrorCode::BadConfig, "unknown family '" + name + "'");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering matrices and entropies of open quantum graphs"};
  app.require_subcommand(1);

  int workers = 0;
  bool serial = false;
  app.add_option("--workers", workers, "worker threads for sweeps and averages (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", serial, "use the serial reference kernels");

  std::string graph_path, config_path, out_path;
  auto* sweep = app.add_subcommand("sweep", "k-sweep of probabilities, entropies and amplitudes");
  sweep->add_option("--graph", graph_path, "graph spec JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--config", config_path, "sweep config JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "CSV output (default stdout)");

  std::optional<double> tol;
  auto* average = app.add_subcommand("average", "period-averaged entropies");
  average->add_option("--config", config_path, "average config JSON")->required()->check(CLI::ExistingFile);
  average->add_option("--out", out_path, "CSV output (default stdout)");
  average->add_option("--tol", tol, "quadrature tolerance (overrides the config)")
      ->check(CLI::PositiveNumber);

  std::string family_name = "all";
  int n = 0, z_samples = 512;
  auto* closed = app.add_subcommand("closed-form", "closed-form amplitudes on the unit circle");
  closed->add_option("--family", family_name, "series|parallel|pvv|cycle|wheel|complete")->required();
  closed->add_option("--n", n, "family size");
  closed->add_option("--z-samples", z_samples, "points on the unit circle")->check(CLI::PositiveNumber);
  closed->add_option("--out", out_path, "CSV output (default stdout)");

  std::optional<int> n_min, n_max;
  int k_samples = 512;
  auto* validate = app.add_subcommand("validate", "engine vs closed forms");
  validate->add_option("--family", family_name, "family name or 'all'");
  validate->add_option("--n-min", n_min, "smallest family size");
  validate->add_option("--n-max", n_max, "largest family size");
  validate->add_option("--k-samples", k_samples, "k points per case")->check(CLI::PositiveNumber);

  std::string out_dir = "figures", preset;
  auto* reproduce = app.add_subcommand("reproduce", "write every figure dataset as CSV");
  reproduce->add_option("--out-dir", out_dir, "output directory");
  reproduce->add_option("--preset", preset, "only this preset");
  bool list = false;
  reproduce->add_flag("--list", list, "list presets and exit");

  CLI11_PARSE(app, argc, argv);

  qgs::ExecutionPolicy exec;
  exec.mode = serial ? qgs::Execution::Serial : qgs::Execution::Parallel;
  exec.workers = workers;

  try {
    if (*sweep) {
      const qgs::OpenGraph og = qgs::load_graph_spec(graph_path);
      warn_unitarity(og);
      const qgs::SweepConfig cfg = qgs::load_sweep_config(config_path);
      Output out(out_path);
      qgs::run_sweep(og, cfg, out.stream(), exec);
    } else if (*average) {
      qgs::AverageConfig cfg = qgs::load_average_config(config_path);
      if (tol) cfg.tol = *tol;
      if (cfg.graph) warn_unitarity(*cfg.graph);
      const auto rows = qgs::run_average(cfg, exec);
      Output out(out_path);
      qgs::write_average_csv(out.stream(), rows);
    } else if (*closed) {
      const qgs::Family f = family_or_throw(family_name);
      Output out(out_path);
      qgs::write_closed_form_csv(out.stream(), f, n, z_samples);
    } else if (*validate) {
      qgs::ValidateOptions options;
      if (family_name != "all") options.family = family_or_throw(family_name);
      options.n_min = n_min;
      options.n_max = n_max;
      options.k_samples = k_samples;
      const qgs::ValidationReport report = qgs::run_validate(options);
      qgs::print_report(std::cout, report);
      return report.all_pass() ? 0 : 1;
    } else if (*reproduce) {
      if (list) {
        for (const qgs::Preset& p : qgs::presets()) std::cout << p.name << "  " << p.description << '\n';
        return 0;
      }
      double total = 0.0;
      for (const auto& f : qgs::reproduce(out_dir, exec, preset)) {
        std::printf("%-30s %8.2f s  %s\n", f.preset.c_str(), f.seconds, f.path.string().c_str());
        total += f.seconds;
      }
      std::printf("total %.2f s\n", total);
    }
  } catch (const qgs::Error& e) {
    std::cerr << "qgs: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qgs: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
