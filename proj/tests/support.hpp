#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "qgs/graph.hpp"
#include "qgs/probability.hpp"

namespace qgs::testing {

constexpr double kPi = std::numbers::pi;

/// k_j = period (j + 1/2) / n: avoids k l = 0 and k l = pi on unit edges.
inline std::vector<double> midpoint_grid(int n, double period = 2.0 * kPi) {
  std::vector<double> k(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) k[static_cast<std::size_t>(j)] = period * (j + 0.5) / n;
  return k;
}

/// Connected Neumann multigraph: a random spanning tree plus extra edges
/// (parallel edges allowed), lengths in [0.5, 2], a random non-empty lead set.
inline OpenGraph random_open_graph(std::mt19937_64& rng, int max_vertices = 8, int max_edges = 14) {
  std::uniform_int_distribution<int> vdist(2, max_vertices);
  const int v = vdist(rng);
  std::uniform_int_distribution<int> edist(v - 1, max_edges);
  const int e = edist(rng);
  std::uniform_real_distribution<double> len(0.5, 2.0);
  std::vector<Edge> edges;
  for (int j = 2; j <= v; ++j) {
    std::uniform_int_distribution<int> parent(1, j - 1);
    edges.push_back({parent(rng), j, len(rng)});
  }
  std::uniform_int_distribution<int> any(1, v);
  while (static_cast<int>(edges.size()) < e) {
    const int a = any(rng), b = any(rng);
    if (a != b) edges.push_back({a, b, len(rng)});
  }
  std::vector<VertexId> leads;
  std::bernoulli_distribution coin(0.5);
  for (int j = 1; j <= v; ++j) {
    if (coin(rng)) leads.push_back(j);
  }
  if (leads.empty()) leads.push_back(any(rng));
  std::shuffle(leads.begin(), leads.end(), rng);
  return OpenGraph(MetricGraph(v, std::move(edges)), std::move(leads));
}

/// Every connected multigraph on 2..max_vertices vertices with 1..max_edges
/// edges (edges as a multiset of vertex pairs), vertex labels fixed.
inline std::vector<std::pair<int, std::vector<std::pair<int, int>>>> small_multigraphs(
    int max_vertices = 5, int max_edges = 4) {
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> out;
  for (int v = 2; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= v; ++a) {
      for (int b = a + 1; b <= v; ++b) pairs.push_back({a, b});
    }
    const int p = static_cast<int>(pairs.size());
    for (int m = 1; m <= max_edges; ++m) {
      // multisets of size m: non-decreasing index sequences
      std::vector<int> idx(static_cast<std::size_t>(m), 0);
      for (;;) {
        std::vector<int> parent(static_cast<std::size_t>(v + 1));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
          return x;
        };
        std::vector<std::pair<int, int>> chosen;
        for (int i : idx) {
          chosen.push_back(pairs[static_cast<std::size_t>(i)]);
          parent[static_cast<std::size_t>(find(chosen.back().first))] = find(chosen.back().second);
        }
        int roots = 0;
        for (int x = 1; x <= v; ++x) roots += find(x) == x ? 1 : 0;
        if (roots == 1) out.push_back({v, chosen});

        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == p - 1) --pos;
        if (pos < 0) break;
        const int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int q = pos; q < m; ++q) idx[static_cast<std::size_t>(q)] = next;
      }
    }
  }
  return out;
}

/// Truncated path sum: launches a unit wave from the entrance lead and
/// propagates it bounce by bounce, collecting what leaves through every lead.
/// Neumann amplitudes are recomputed here from the degree so the oracle
/// shares nothing with the engine except the graph description.
inline std::vector<std::complex<double>> path_sum_column(const OpenGraph& og, VertexId entrance,
                                                         double k, int bounces) {
  using C = std::complex<double>;
  const MetricGraph& g = og.base();
  const int v = g.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(v + 1), 0);
  for (const Edge& e : g.edges()) {
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }
  std::vector<int> channel(static_cast<std::size_t>(v + 1), -1);
  for (std::size_t c = 0; c < og.leads().size(); ++c) {
    channel[static_cast<std::size_t>(og.leads()[c])] = static_cast<int>(c);
    ++degree[static_cast<std::size_t>(og.leads()[c])];
  }
  auto r = [&](int x) { return 2.0 / degree[static_cast<std::size_t>(x)] - 1.0; };
  auto t = [&](int x) { return 2.0 / degree[static_cast<std::size_t>(x)]; };

  struct Dir {
    int from, to;
    std::size_t edge;
    C phase;
  };
  std::vector<Dir> dirs;
  for (std::size_t s = 0; s < g.edge_count(); ++s) {
    const Edge& e = g.edges()[s];
    const C z = std::polar(1.0, k * e.length);
    dirs.push_back({e.a, e.b, s, z});
    dirs.push_back({e.b, e.a, s, z});
  }

  std::vector<C> sigma(og.leads().size(), C{});
  sigma[static_cast<std::size_t>(channel[static_cast<std::size_t>(entrance)])] += r(entrance);
  // amplitude that has just arrived at the head of each directed edge
  std::vector<C> amp(dirs.size(), C{});
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    if (dirs[d].from == entrance) amp[d] = t(entrance) * dirs[d].phase;
  }
  for (int b = 0; b < bounces; ++b) {
    std::vector<C> next(dirs.size(), C{});
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      if (amp[d] == C{}) continue;
      const int j = dirs[d].to;
      const int c = channel[static_cast<std::size_t>(j)];
      if (c >= 0) sigma[static_cast<std::size_t>(c)] += t(j) * amp[d];
      for (std::size_t d2 = 0; d2 < dirs.size(); ++d2) {
        if (dirs[d2].from != j) continue;
        const double coupling = dirs[d2].edge == dirs[d].edge ? r(j) : t(j);
        next[d2] += coupling * amp[d] * dirs[d2].phase;
      }
    }
    amp = std::move(next);
  }
  return sigma;
}

/// Uniform sample from the probability simplex of dimension l.
inline ProbabilityVector random_simplex(std::mt19937_64& rng, std::size_t l) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> x(l);
  double sum = 0.0;
  for (double& v : x) sum += (v = ex(rng));
  for (double& v : x) v /= sum;
  return ProbabilityVector::normalized(std::move(x));
}

}  // namespace qgs::testing
