#include "qgs/sweep.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <sstream>

#include "qgs/csv.hpp"
#include "qgs/scattering.hpp"

namespace qgs {

void SweepConfig::validate() const {
  if (!(k_min > 0.0)) throw Error(ErrorCode::BadConfig, "k_min must be positive");
  if (!(k_min < k_max)) throw Error(ErrorCode::BadConfig, "k_min must be below k_max");
  if (samples < 2) throw Error(ErrorCode::BadConfig, "samples must be at least 2");
}

std::vector<double> SweepConfig::grid() const {
  validate();
  std::vector<double> k(static_cast<std::size_t>(samples));
  const double step = (k_max - k_min) / (samples - 1);
  for (int j = 0; j < samples; ++j) k[static_cast<std::size_t>(j)] = k_min + j * step;
  k.back() = k_max;
  return k;
}

bool SweepConfig::wants(Quantity q) const {
  return std::find(outputs.begin(), outputs.end(), q) != outputs.end();
}

namespace {

double retry_offset_for(const OpenGraph& og, const SweepConfig& cfg) {
  try {
    return 1e-9 * infer_period(og.base()).K;
  } catch (const Error&) {
    return 1e-9 * (cfg.k_max - cfg.k_min);
  }
}

OpenGraph with_config_entrance(const OpenGraph& og, const SweepConfig& cfg) {
  return cfg.entrance ? og.with_entrance(*cfg.entrance) : og;
}

}  // namespace

SweepRow evaluate_sweep_row(const OpenGraph& og, const SweepConfig& cfg, double k,
                            double retry_offset) {
  SweepRow row;
  row.k = k;
  for (double kk : {k, k + retry_offset}) {
    try {
      const ScatteringMatrix sm = scattering_matrix(og, kk);
      const ProbabilityVector p = probabilities(sm, og.entrance_vertex());
      row.probabilities.assign(p.values().begin(), p.values().end());
      row.entropies.clear();
      if (cfg.wants(Quantity::Entropy)) {
        for (const EntropyMeasure& m : cfg.measures) row.entropies.push_back(m(p));
      }
      const auto col = static_cast<Eigen::Index>(og.entrance());
      row.amplitudes.resize(og.channel_count());
      for (std::size_t j = 0; j < og.channel_count(); ++j) {
        row.amplitudes[j] = sm.amplitudes()(static_cast<Eigen::Index>(j), col);
      }
      row.ok = true;
      return row;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem && e.code() != ErrorCode::UnitarityViolation) {
        throw Error(ErrorCode::EngineFailure, "k = " + format_number(k) + ": " + e.what());
      }
    }
  }
  return row;
}

std::vector<SweepRow> sweep_rows_serial(const OpenGraph& og, const SweepConfig& cfg) {
  const OpenGraph g = with_config_entrance(og, cfg);
  const std::vector<double> ks = cfg.grid();
  const double offset = retry_offset_for(g, cfg);
  std::vector<SweepRow> rows;
  rows.reserve(ks.size());
  for (double k : ks) rows.push_back(evaluate_sweep_row(g, cfg, k, offset));
  return rows;
}

std::vector<SweepRow> sweep_rows_parallel(const OpenGraph& og, const SweepConfig& cfg,
                                          int workers) {
  const OpenGraph g = with_config_entrance(og, cfg);
  const std::vector<double> ks = cfg.grid();
  const double offset = retry_offset_for(g, cfg);
  std::vector<SweepRow> rows(ks.size());
  std::exception_ptr failure;
  const auto count = static_cast<long>(ks.size());
  const int threads = workers > 0 ? workers : 0;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads != 1)
  for (long j = 0; j < count; ++j) {
    try {
      rows[static_cast<std::size_t>(j)] = evaluate_sweep_row(g, cfg, ks[static_cast<std::size_t>(j)], offset);
    } catch (...) {
#pragma omp critical(qgs_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SweepRow> sweep_rows(const OpenGraph& og, const SweepConfig& cfg, ExecutionPolicy exec) {
  return exec.mode == Execution::Serial ? sweep_rows_serial(og, cfg)
                                        : sweep_rows_parallel(og, cfg, exec.workers);
}

void write_sweep_csv(std::ostream& out, const OpenGraph& og, const SweepConfig& cfg,
                     std::span<const SweepRow> rows) {
  const std::size_t l = og.channel_count();
  const bool probs = cfg.wants(Quantity::Probabilities);
  const bool ents = cfg.wants(Quantity::Entropy);
  const bool amps = cfg.wants(Quantity::AmplitudesReIm);

  std::string line = "k";
  if (probs) {
    for (std::size_t j = 1; j <= l; ++j) line += ",p_" + std::to_string(j);
  }
  if (ents) {
    for (const EntropyMeasure& m : cfg.measures) line += "," + m.column_name();
  }
  if (amps) {
    for (std::size_t j = 1; j <= l; ++j) {
      line += ",re_" + std::to_string(j) + ",im_" + std::to_string(j);
    }
  }
  out << line << '\n';

  const std::string na(kNotAvailable);
  for (const SweepRow& row : rows) {
    line = format_number(row.k);
    if (probs) {
      for (std::size_t j = 0; j < l; ++j) line += "," + (row.ok ? format_number(row.probabilities[j]) : na);
    }
    if (ents) {
      for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
        line += "," + (row.ok ? format_number(row.entropies[m]) : na);
      }
    }
    if (amps) {
      for (std::size_t j = 0; j < l; ++j) {
        if (row.ok) {
          line += "," + format_number(row.amplitudes[j].real()) + "," +
                  format_number(row.amplitudes[j].imag());
        } else {
          line += "," + na + "," + na;
        }
      }
    }
    out << line << '\n';
  }
}

void run_sweep(const OpenGraph& og, const SweepConfig& cfg, std::ostream& out, ExecutionPolicy exec) {
  const std::vector<SweepRow> rows = sweep_rows(og, cfg, exec);
  write_sweep_csv(out, cfg.entrance ? og.with_entrance(*cfg.entrance) : og, cfg, rows);
}

void AverageConfig::validate() const {
  if (family.has_value() == graph.has_value()) {
    throw Error(ErrorCode::BadConfig, "give exactly one of a family or a graph");
  }
  if (family && *family != Family::Pvv &&
      (n_min < family_min_size(*family) || n_max < n_min)) {
    throw Error(ErrorCode::BadConfig, "invalid n range for " + std::string(to_string(*family)));
  }
  if (kind != MeasureKind::Shannon && parameter_grid.empty()) {
    throw Error(ErrorCode::BadConfig, "parameter grid is empty");
  }
  for (double x : parameter_grid) (void)EntropyMeasure::with_limit(kind, x);
  if (period && !(*period > 0.0)) throw Error(ErrorCode::BadConfig, "period must be positive");
  if (!(tol > 0.0)) throw Error(ErrorCode::BadConfig, "tol must be positive");
}

std::vector<AverageRow> run_average(const AverageConfig& cfg, ExecutionPolicy exec) {
  cfg.validate();
  std::vector<double> params = cfg.parameter_grid;
  if (cfg.kind == MeasureKind::Shannon) params = {1.0};
  std::vector<EntropyMeasure> measures;
  for (double x : params) measures.push_back(EntropyMeasure::with_limit(cfg.kind, x));

  struct Target {
    std::string name;
    int n;
    OpenGraph graph;
  };
  std::vector<Target> targets;
  if (cfg.graph) {
    targets.push_back({"graph", cfg.graph->base().vertex_count(), *cfg.graph});
  } else if (*cfg.family == Family::Pvv) {
    targets.push_back({"pvv", 1, family_graph(Family::Pvv, 1)});
  } else {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      targets.push_back({std::string(to_string(*cfg.family)), n, family_graph(*cfg.family, n)});
    }
  }

  std::vector<AverageRow> rows;
  for (const Target& t : targets) {
    const PeriodSpec period =
        cfg.period ? PeriodSpec::explicit_period(*cfg.period) : infer_period(t.graph.base());
    const AverageEntropy avg = average_entropies(t.graph, measures, period, cfg.tol, exec);
    for (std::size_t m = 0; m < params.size(); ++m) {
      rows.push_back({t.name, t.n, params[m], avg.values[m], avg.error_estimate});
    }
  }
  return rows;
}

void write_average_csv(std::ostream& out, std::span<const AverageRow> rows) {
  out << "family,n,parameter,value,quad_error_estimate\n";
  for (const AverageRow& r : rows) {
    out << r.family << ',' << r.n << ',' << format_number(r.parameter) << ','
        << format_number(r.value) << ',' << format_number(r.error_estimate) << '\n';
  }
}

}  // namespace qgs
