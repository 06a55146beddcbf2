#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgs/graph_json.hpp"
#include "qgs/sweep.hpp"

namespace qgs {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadConfig, what); }

json parse_document(std::string_view text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) bad(std::string(what) + " must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SpecParse, std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) bad("unknown field '" + key + "' in " + where);
  }
}

double number(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) bad(std::string("'") + key + "' must be a number");
  return obj[key].get<double>();
}

int integer(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    bad(std::string("'") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

MeasureKind parse_kind(const std::string& s) {
  if (s == "shannon") return MeasureKind::Shannon;
  if (s == "renyi") return MeasureKind::Renyi;
  if (s == "tsallis") return MeasureKind::Tsallis;
  bad("unknown measure '" + s + "'");
}

EntropyMeasure parse_measure(const json& j) {
  if (j.is_string()) {
    if (parse_kind(j.get<std::string>()) != MeasureKind::Shannon) {
      bad("renyi/tsallis measures need a parameter object");
    }
    return EntropyMeasure::shannon();
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    bad("a measure is {\"kind\": ..., \"alpha\"|\"q\": ...}");
  }
  switch (parse_kind(j["kind"].get<std::string>())) {
    case MeasureKind::Shannon:
      reject_unknown(j, {"kind"}, "measure");
      return EntropyMeasure::shannon();
    case MeasureKind::Renyi:
      reject_unknown(j, {"kind", "alpha"}, "measure");
      return EntropyMeasure::renyi(number(j, "alpha"));
    case MeasureKind::Tsallis:
      reject_unknown(j, {"kind", "q"}, "measure");
      return EntropyMeasure::tsallis(number(j, "q"));
  }
  bad("unreachable");
}

Quantity parse_quantity(const json& j) {
  if (!j.is_string()) bad("output tags are strings");
  const auto s = j.get<std::string>();
  if (s == "probabilities") return Quantity::Probabilities;
  if (s == "entropy") return Quantity::Entropy;
  if (s == "amplitudes_re_im") return Quantity::AmplitudesReIm;
  bad("unknown output '" + s + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view json_text) {
  const json doc = parse_document(json_text, "sweep config");
  reject_unknown(doc, {"k_min", "k_max", "samples", "entrance", "measures", "outputs"},
                 "sweep config");
  SweepConfig cfg;
  cfg.k_min = number(doc, "k_min");
  cfg.k_max = number(doc, "k_max");
  cfg.samples = integer(doc, "samples");
  if (doc.contains("entrance")) {
    const int e = integer(doc, "entrance");
    if (e < 0) bad("'entrance' must be a non-negative lead index");
    cfg.entrance = static_cast<std::size_t>(e);
  }
  if (doc.contains("measures")) {
    if (!doc["measures"].is_array()) bad("'measures' must be an array");
    for (const auto& m : doc["measures"]) cfg.measures.push_back(parse_measure(m));
  }
  if (doc.contains("outputs")) {
    if (!doc["outputs"].is_array()) bad("'outputs' must be an array");
    for (const auto& o : doc["outputs"]) cfg.outputs.push_back(parse_quantity(o));
  } else {
    cfg.outputs = {Quantity::Probabilities};
    if (!cfg.measures.empty()) cfg.outputs.push_back(Quantity::Entropy);
  }
  if (cfg.wants(Quantity::Entropy) && cfg.measures.empty()) bad("'entropy' output needs measures");
  cfg.validate();
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  return parse_sweep_config(read_file(path));
}

AverageConfig parse_average_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  const json doc = parse_document(json_text, "average config");
  reject_unknown(doc, {"period", "measure", "parameter_grid", "families", "tol"}, "average config");
  AverageConfig cfg;

  if (doc.contains("period")) {
    const auto& p = doc["period"];
    if (p.is_number()) {
      cfg.period = p.get<double>();
    } else if (!(p.is_string() && p.get<std::string>() == "infer")) {
      bad("'period' must be a number or \"infer\"");
    }
  }
  if (!doc.contains("measure") || !doc["measure"].is_string()) bad("'measure' must be a string");
  cfg.kind = parse_kind(doc["measure"].get<std::string>());
  if (doc.contains("parameter_grid")) {
    if (!doc["parameter_grid"].is_array()) bad("'parameter_grid' must be an array");
    for (const auto& x : doc["parameter_grid"]) {
      if (!x.is_number()) bad("'parameter_grid' entries must be numbers");
      cfg.parameter_grid.push_back(x.get<double>());
    }
  }
  if (doc.contains("tol")) cfg.tol = number(doc, "tol");

  if (!doc.contains("families") || !doc["families"].is_object()) bad("'families' must be an object");
  const json& fam = doc["families"];
  if (fam.contains("graph")) {
    reject_unknown(fam, {"graph"}, "families");
    const json& g = fam["graph"];
    if (g.is_string()) {
      std::filesystem::path path = g.get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      cfg.graph = load_graph_spec(path);
    } else if (g.is_object()) {
      cfg.graph = parse_graph_spec(g.dump());
    } else {
      bad("'families.graph' must be a path or an inline graph spec");
    }
  } else {
    reject_unknown(fam, {"name", "n_min", "n_max"}, "families");
    if (!fam.contains("name") || !fam["name"].is_string()) bad("'families.name' must be a string");
    cfg.family = parse_family(fam["name"].get<std::string>());
    if (!cfg.family) bad("unknown family '" + fam["name"].get<std::string>() + "'");
    if (*cfg.family == Family::Pvv) {
      cfg.n_min = cfg.n_max = 1;
    } else {
      cfg.n_min = integer(fam, "n_min");
      cfg.n_max = integer(fam, "n_max");
    }
  }
  cfg.validate();
  return cfg;
}

AverageConfig load_average_config(const std::filesystem::path& path) {
  return parse_average_config(read_file(path), path.parent_path());
}

}  // namespace qgs
