#include "qgs/graph_families.hpp"

#include <numeric>
#include <string>

namespace qgs {
namespace {

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void require_size(int n, int min, const char* family) {
  if (n < min) {
    throw Error(ErrorCode::BadParameter,
                std::string(family) + " needs n >= " + std::to_string(min));
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Series: return "series";
    case Family::Parallel: return "parallel";
    case Family::Pvv: return "pvv";
    case Family::Cycle: return "cycle";
    case Family::Wheel: return "wheel";
    case Family::Complete: return "complete";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Series, Family::Parallel, Family::Pvv, Family::Cycle, Family::Wheel,
                   Family::Complete}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

int family_min_size(Family f) noexcept {
  switch (f) {
    case Family::Cycle: return 3;
    case Family::Wheel: return 4;
    case Family::Complete: return 2;
    default: return 1;
  }
}

OpenGraph cycle_graph(int n, double length) {
  require_size(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int j = 1; j <= n; ++j) edges.push_back({j, j % n + 1, length});
  return OpenGraph(MetricGraph(n, std::move(edges)), all_vertices(n));
}

OpenGraph wheel_graph(int n, double length) {
  require_size(n, 4, "wheel");
  std::vector<Edge> edges;
  for (int j = 2; j <= n; ++j) edges.push_back({1, j, length});
  for (int j = 2; j <= n; ++j) edges.push_back({j, j == n ? 2 : j + 1, length});
  return OpenGraph(MetricGraph(n, std::move(edges)), all_vertices(n));
}

OpenGraph complete_graph(int n, double length) {
  require_size(n, 2, "complete");
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) edges.push_back({a, b, length});
  }
  return OpenGraph(MetricGraph(n, std::move(edges)), all_vertices(n));
}

OpenGraph pvv_graph(double length1, double length2) {
  return OpenGraph(MetricGraph(2, {{1, 2, length1}, {1, 2, length2}}), {1, 2});
}

OpenGraph diamond_graph(double arm1, double arm2, Boundary ends, Boundary middle1,
                        Boundary middle2) {
  std::vector<Edge> edges{{1, 2, arm1}, {2, 4, arm1}, {1, 3, arm2}, {3, 4, arm2}};
  return OpenGraph(MetricGraph(4, std::move(edges), {ends, middle1, middle2, ends}), {1, 4});
}

OpenGraph series_bundle_graph(int n, double length) {
  require_size(n, 1, "series bundle");
  std::vector<Edge> edges;
  for (int b = 0; b < n; ++b) {
    const int left = 2 * b + 1;
    edges.push_back({left, left + 1, length});
    edges.push_back({left, left + 1, length});
    if (b + 1 < n) edges.push_back({left + 1, left + 2, length});
  }
  return OpenGraph(MetricGraph(2 * n, std::move(edges)), {1, 2 * n});
}

OpenGraph parallel_bundle_graph(int n, double length) {
  require_size(n, 1, "parallel bundle");
  std::vector<Edge> edges;
  for (int b = 0; b < n; ++b) {
    const int left = 3 + 2 * b;
    edges.push_back({1, left, length});
    edges.push_back({left, left + 1, length});
    edges.push_back({left, left + 1, length});
    edges.push_back({left + 1, 2, length});
  }
  return OpenGraph(MetricGraph(2 + 2 * n, std::move(edges)), {1, 2});
}

OpenGraph series_path_graph(const std::vector<Custom>& elements, double length) {
  const int n = static_cast<int>(elements.size());
  require_size(n, 2, "series path");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) edges.push_back({j, j + 1, length});
  std::vector<Boundary> bc(elements.begin(), elements.end());
  return OpenGraph(MetricGraph(n, std::move(edges), std::move(bc)), {1, n});
}

OpenGraph family_graph(Family f, int n) {
  switch (f) {
    case Family::Series: return series_bundle_graph(n);
    case Family::Parallel: return parallel_bundle_graph(n);
    case Family::Pvv: return pvv_graph(1.0, 1.0);
    case Family::Cycle: return cycle_graph(n);
    case Family::Wheel: return wheel_graph(n);
    case Family::Complete: return complete_graph(n);
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

}  // namespace qgs
