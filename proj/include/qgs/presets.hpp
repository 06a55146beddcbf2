#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgs/execution.hpp"
#include "qgs/sweep.hpp"

namespace qgs {

/// A reproducible dataset: one CSV per preset.
struct Preset {
  std::string name;
  std::string description;
  std::function<void(std::ostream&, ExecutionPolicy)> write;
};

/// Default sweep axis: 1024 samples on k in (0, 4 pi], unit edges, so the
/// k column equals k l.
SweepConfig default_sweep_axis();

/// Sweep config of a named sweep preset (the graph comes from preset_graph).
SweepConfig preset_sweep_config(const std::string& name);
OpenGraph preset_graph(const std::string& name);

const std::vector<Preset>& presets();
const Preset& find_preset(const std::string& name);

struct ReproducedFile {
  std::string preset;
  std::filesystem::path path;
  double seconds;
};

/// Writes <dir>/<name>.csv for every preset (or only `only`, if non-empty).
std::vector<ReproducedFile> reproduce(const std::filesystem::path& dir, ExecutionPolicy exec,
                                      const std::string& only = {});

}  // namespace qgs
