#include "qgs/presets.hpp"

#include <chrono>
#include <fstream>
#include <numbers>
#include <ostream>

#include "qgs/csv.hpp"

namespace qgs {
namespace {

const std::vector<double> kParameterGrid{0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};
const std::vector<double> kSweepParameters{0.25, 0.5, 2.0, 4.0};

std::vector<EntropyMeasure> sweep_measures() {
  std::vector<EntropyMeasure> m{EntropyMeasure::shannon()};
  for (double a : kSweepParameters) m.push_back(EntropyMeasure::renyi(a));
  for (double q : kSweepParameters) m.push_back(EntropyMeasure::tsallis(q));
  return m;
}

struct SweepPreset {
  const char* name;
  const char* description;
  Family family;
  int n;
  bool entropies;
};

const SweepPreset kSweeps[] = {
    {"series-bundle-coefficients", "reflection/transmission of 8 P(v,v) blocks in series",
     Family::Series, 8, false},
    {"parallel-bundle-coefficients", "reflection/transmission of 8 P(v,v) blocks in parallel",
     Family::Parallel, 8, false},
    {"series-bundle-entropies", "Renyi/Tsallis entropies of 8 P(v,v) blocks in series",
     Family::Series, 8, true},
    {"parallel-bundle-entropies", "Renyi/Tsallis entropies of 8 P(v,v) blocks in parallel",
     Family::Parallel, 8, true},
    {"cycle7-coefficients", "channel probabilities of C_7", Family::Cycle, 7, false},
    {"cycle8-coefficients", "channel probabilities of C_8", Family::Cycle, 8, false},
    {"cycle7-entropies", "Renyi/Tsallis entropies of C_7", Family::Cycle, 7, true},
    {"cycle8-entropies", "Renyi/Tsallis entropies of C_8", Family::Cycle, 8, true},
    {"wheel5-coefficients", "channel probabilities of W_5", Family::Wheel, 5, false},
    {"wheel5-entropies", "Renyi/Tsallis entropies of W_5", Family::Wheel, 5, true},
    {"complete4-coefficients", "channel probabilities of K_4", Family::Complete, 4, false},
    {"complete4-entropies", "Renyi/Tsallis entropies of K_4", Family::Complete, 4, true},
};

const SweepPreset* find_sweep(const std::string& name) {
  for (const SweepPreset& s : kSweeps) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

struct AveragePreset {
  const char* name;
  const char* description;
  MeasureKind kind;
  std::vector<std::tuple<Family, int, int>> families;
};

const std::vector<AveragePreset>& average_presets() {
  static const std::vector<AveragePreset> list{
      {"bundle-average-renyi", "average Renyi entropy of series/parallel bundles, n = 1..8",
       MeasureKind::Renyi, {{Family::Series, 1, 8}, {Family::Parallel, 1, 8}}},
      {"bundle-average-tsallis", "average Tsallis entropy of series/parallel bundles, n = 1..8",
       MeasureKind::Tsallis, {{Family::Series, 1, 8}, {Family::Parallel, 1, 8}}},
      {"family-average-renyi", "average Renyi entropy of cycles, wheels and complete graphs",
       MeasureKind::Renyi, {{Family::Cycle, 3, 8}, {Family::Wheel, 4, 8}, {Family::Complete, 2, 8}}},
      {"family-average-tsallis", "average Tsallis entropy of cycles, wheels and complete graphs",
       MeasureKind::Tsallis, {{Family::Cycle, 3, 8}, {Family::Wheel, 4, 8}, {Family::Complete, 2, 8}}},
  };
  return list;
}

void write_average_preset(const AveragePreset& p, std::ostream& out, ExecutionPolicy exec) {
  std::vector<AverageRow> rows;
  for (const auto& [family, lo, hi] : p.families) {
    AverageConfig cfg;
    cfg.kind = p.kind;
    cfg.parameter_grid = kParameterGrid;
    cfg.family = family;
    cfg.n_min = lo;
    cfg.n_max = hi;
    const auto part = run_average(cfg, exec);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  write_average_csv(out, rows);
}

// Two-outcome distribution (p, 1 - p) on a p x gamma grid.
void write_bernoulli(std::ostream& out) {
  out << "p,gamma,renyi,tsallis\n";
  for (int i = 1; i < 100; ++i) {
    const double p = i / 100.0;
    const ProbabilityVector pv = ProbabilityVector::normalized({p, 1.0 - p});
    for (int j = 0; j <= 40; ++j) {
      const double g = j / 10.0;
      const EntropyMeasure r = EntropyMeasure::with_limit(MeasureKind::Renyi, g);
      const EntropyMeasure t = EntropyMeasure::with_limit(MeasureKind::Tsallis, g);
      out << format_number(p) << ',' << format_number(g) << ',' << format_number(r(pv)) << ','
          << format_number(t(pv)) << '\n';
    }
  }
}

}  // namespace

SweepConfig default_sweep_axis() {
  SweepConfig cfg;
  cfg.samples = 1024;
  cfg.k_max = 4.0 * std::numbers::pi;
  cfg.k_min = cfg.k_max / cfg.samples;
  return cfg;
}

SweepConfig preset_sweep_config(const std::string& name) {
  const SweepPreset* s = find_sweep(name);
  if (!s) throw Error(ErrorCode::BadConfig, "no sweep preset named '" + name + "'");
  SweepConfig cfg = default_sweep_axis();
  if (s->entropies) {
    cfg.measures = sweep_measures();
    cfg.outputs = {Quantity::Entropy};
  } else {
    cfg.outputs = {Quantity::Probabilities};
  }
  return cfg;
}

OpenGraph preset_graph(const std::string& name) {
  const SweepPreset* s = find_sweep(name);
  if (!s) throw Error(ErrorCode::BadConfig, "no sweep preset named '" + name + "'");
  return family_graph(s->family, s->n);
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = [] {
    std::vector<Preset> v;
    v.push_back({"bernoulli-entropies", "Renyi/Tsallis entropies of a two-outcome distribution",
                 [](std::ostream& out, ExecutionPolicy) { write_bernoulli(out); }});
    for (const SweepPreset& s : kSweeps) {
      const std::string name = s.name;
      v.push_back({name, s.description, [name](std::ostream& out, ExecutionPolicy exec) {
                     run_sweep(preset_graph(name), preset_sweep_config(name), out, exec);
                   }});
    }
    for (const AveragePreset& a : average_presets()) {
      v.push_back({a.name, a.description, [&a](std::ostream& out, ExecutionPolicy exec) {
                     write_average_preset(a, out, exec);
                   }});
    }
    return v;
  }();
  return list;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::BadConfig, "no preset named '" + name + "'");
}

std::vector<ReproducedFile> reproduce(const std::filesystem::path& dir, ExecutionPolicy exec,
                                      const std::string& only) {
  std::filesystem::create_directories(dir);
  std::vector<ReproducedFile> written;
  for (const Preset& p : presets()) {
    if (!only.empty() && p.name != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const std::filesystem::path path = dir / (p.name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::BadConfig, "cannot write " + path.string());
    p.write(out, exec);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    written.push_back({p.name, path, took.count()});
  }
  if (!only.empty() && written.empty()) (void)find_preset(only);
  return written;
}

}  // namespace qgs
