#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgs/entropy.hpp"
#include "qgs/execution.hpp"
#include "qgs/graph.hpp"
#include "qgs/graph_families.hpp"

namespace qgs {

enum class Quantity { Probabilities, Entropy, AmplitudesReIm };

struct SweepConfig {
  double k_min = 0.0;
  double k_max = 0.0;
  int samples = 0;
  std::optional<std::size_t> entrance;  // overrides the graph's entrance
  std::vector<EntropyMeasure> measures;
  std::vector<Quantity> outputs;

  /// BadConfig unless 0 < k_min < k_max and samples >= 2.
  void validate() const;
  /// `samples` equally spaced points, both ends included.
  std::vector<double> grid() const;
  bool wants(Quantity q) const;
};

struct SweepRow {
  double k = 0.0;
  bool ok = false;  // false: singular even after the retry, emitted as NA
  std::vector<double> probabilities;
  std::vector<double> entropies;
  std::vector<cplx> amplitudes;  // entrance column of the scattering matrix
};

/// One row; on a singular k retries once at k + retry_offset.
SweepRow evaluate_sweep_row(const OpenGraph& og, const SweepConfig& cfg, double k,
                            double retry_offset);

/// Reference loop.
std::vector<SweepRow> sweep_rows_serial(const OpenGraph& og, const SweepConfig& cfg);
/// OpenMP kernel; rows land in grid order.
std::vector<SweepRow> sweep_rows_parallel(const OpenGraph& og, const SweepConfig& cfg,
                                          int workers = 0);

std::vector<SweepRow> sweep_rows(const OpenGraph& og, const SweepConfig& cfg, ExecutionPolicy exec);

/// Header: k, p_1..p_l, one column per measure, then re_j/im_j pairs.
void write_sweep_csv(std::ostream& out, const OpenGraph& og, const SweepConfig& cfg,
                     std::span<const SweepRow> rows);

void run_sweep(const OpenGraph& og, const SweepConfig& cfg, std::ostream& out,
               ExecutionPolicy exec = {});

/// Either a closed-form family over n_min..n_max or one explicit graph.
struct AverageConfig {
  std::optional<double> period;  // nullopt: infer from the edge lengths
  MeasureKind kind = MeasureKind::Renyi;
  std::vector<double> parameter_grid;
  std::optional<Family> family;
  int n_min = 0;
  int n_max = 0;
  std::optional<OpenGraph> graph;
  double tol = 1e-6;

  void validate() const;
};

struct AverageRow {
  std::string family;
  int n;
  double parameter;
  double value;
  double error_estimate;
};

/// One row per (n, parameter). Parameters equal to 1 yield the Shannon
/// average.
std::vector<AverageRow> run_average(const AverageConfig& cfg, ExecutionPolicy exec = {});
void write_average_csv(std::ostream& out, std::span<const AverageRow> rows);

SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::filesystem::path& path);
/// Sweep config document:
///
///   {"k_min": 0.01, "k_max": 12.56, "samples": 1024, "entrance": 0,
///    "measures": [{"kind": "shannon"}, {"kind": "renyi", "alpha": 2},
///                 {"kind": "tsallis", "q": 0.5}],
///    "outputs": ["probabilities", "entropy", "amplitudes_re_im"]}
///
/// Average config document:
///
///   {"period": "infer", "measure": "renyi", "parameter_grid": [0.5, 2],
///    "families": {"name": "wheel", "n_min": 4, "n_max": 7}, "tol": 1e-6}
///
/// "families" may instead be {"graph": "g.json"} or {"graph": {...inline
/// spec...}}; relative paths resolve against `base_dir`.
AverageConfig parse_average_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir = {});
AverageConfig load_average_config(const std::filesystem::path& path);

}  // namespace qgs
