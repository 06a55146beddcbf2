#include "qgs/graph_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qgs {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::SpecParse, what); }

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail("unknown field '" + key + "' in " + where);
  }
}

cplx parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(where + ": expected a number or [re, im]");
}

Boundary parse_boundary(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "neumann") return Neumann{};
    if (s == "dirichlet") return Dirichlet{};
    fail(where + ": unknown boundary '" + s + "'");
  }
  if (j.is_object()) {
    reject_unknown(j, {"r", "t"}, where);
    if (!j.contains("r") || !j.contains("t")) fail(where + ": custom boundary needs r and t");
    return Custom{parse_complex(j["r"], where + ".r"), parse_complex(j["t"], where + ".t")};
  }
  fail(where + ": boundary must be a string or {r, t}");
}

json boundary_to_json(const Boundary& b) {
  if (std::holds_alternative<Neumann>(b)) return "neumann";
  if (std::holds_alternative<Dirichlet>(b)) return "dirichlet";
  const auto& c = std::get<Custom>(b);
  return json{{"r", {c.r.real(), c.r.imag()}}, {"t", {c.t.real(), c.t.imag()}}};
}

}  // namespace

OpenGraph parse_graph_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("graph spec must be a JSON object");
  reject_unknown(doc, {"vertices", "edges", "boundary", "leads", "entrance"}, "graph spec");

  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
    fail("'vertices' must be an integer");
  }
  const int v = doc["vertices"].get<int>();
  if (v < 1) fail("'vertices' must be positive");

  if (!doc.contains("edges") || !doc["edges"].is_array()) fail("'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number()) {
      fail("each edge must be [a, b, length]");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }

  std::vector<Boundary> boundary(static_cast<std::size_t>(v), Neumann{});
  if (doc.contains("boundary")) {
    const auto& b = doc["boundary"];
    if (!b.is_object()) fail("'boundary' must be an object");
    reject_unknown(b, {"default", "overrides"}, "boundary");
    if (b.contains("default")) {
      const Boundary d = parse_boundary(b["default"], "boundary.default");
      boundary.assign(boundary.size(), d);
    }
    if (b.contains("overrides")) {
      if (!b["overrides"].is_object()) fail("'boundary.overrides' must be an object");
      for (const auto& [key, value] : b["overrides"].items()) {
        int id = 0;
        try {
          std::size_t used = 0;
          id = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail("override key '" + key + "' is not a vertex id");
        }
        if (id < 1 || id > v) fail("override for unknown vertex " + key);
        boundary[static_cast<std::size_t>(id - 1)] = parse_boundary(value, "boundary.overrides." + key);
      }
    }
  }

  if (!doc.contains("leads") || !doc["leads"].is_array()) fail("'leads' must be an array");
  std::vector<VertexId> leads;
  for (const auto& l : doc["leads"]) {
    if (!l.is_number_integer()) fail("lead entries must be vertex ids");
    leads.push_back(l.get<int>());
  }

  std::size_t entrance = 0;
  if (doc.contains("entrance")) {
    if (!doc["entrance"].is_number_integer() || doc["entrance"].get<long>() < 0) {
      fail("'entrance' must be a non-negative lead index");
    }
    entrance = doc["entrance"].get<std::size_t>();
  }

  return OpenGraph(MetricGraph(v, std::move(edges), std::move(boundary)), std::move(leads), entrance);
}

OpenGraph load_graph_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_spec(buf.str());
}

std::string graph_spec_to_json(const OpenGraph& og) {
  const MetricGraph& g = og.base();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b, e.length});
  json overrides = json::object();
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (!std::holds_alternative<Neumann>(g.boundary(v))) {
      overrides[std::to_string(v)] = boundary_to_json(g.boundary(v));
    }
  }
  json doc{{"vertices", g.vertex_count()},
           {"edges", edges},
           {"boundary", {{"default", "neumann"}, {"overrides", overrides}}},
           {"leads", std::vector<int>(og.leads().begin(), og.leads().end())},
           {"entrance", og.entrance()}};
  return doc.dump(2);
}

}  // namespace qgs
