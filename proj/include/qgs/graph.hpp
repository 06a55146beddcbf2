#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qgs/error.hpp"

namespace qgs {

using cplx = std::complex<double>;

/// Vertex ids are 1-based throughout the public interface.
using VertexId = int;

struct Neumann {};
struct Dirichlet {};
/// Fixed vertex amplitudes, e.g. a renormalized subgraph evaluated at one k.
struct Custom {
  cplx r;
  cplx t;
};
using Boundary = std::variant<Neumann, Dirichlet, Custom>;

struct Edge {
  VertexId a;
  VertexId b;
  double length;
};

/// Metric multigraph: parallel edges allowed, self-loops rejected by
/// validate_graph.
class MetricGraph {
 public:
  /// An empty `boundary` means Neumann everywhere.
  MetricGraph(int vertex_count, std::vector<Edge> edges, std::vector<Boundary> boundary = {});

  int vertex_count() const noexcept { return vertex_count_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Boundary& boundary(VertexId v) const;

  /// 0/1 adjacency matrix (row-major, v×v). Parallel edges collapse to 1.
  std::vector<std::vector<int>> adjacency() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<Boundary> boundary_;
};

struct GraphIssue {
  ErrorCode code;
  std::size_t edge_index;
  std::string message;
};

/// First violated invariant, or nullopt when the graph is well formed.
std::optional<GraphIssue> validate_graph(const MetricGraph& g);

/// A metric graph with leads attached. At most one lead per vertex; the
/// order of `leads` defines the channel order.
class OpenGraph {
 public:
  OpenGraph(MetricGraph base, std::vector<VertexId> leads, std::size_t entrance = 0);

  const MetricGraph& base() const noexcept { return base_; }
  std::span<const VertexId> leads() const noexcept { return leads_; }
  std::size_t channel_count() const noexcept { return leads_.size(); }
  std::size_t entrance() const noexcept { return entrance_; }
  VertexId entrance_vertex() const noexcept { return leads_[entrance_]; }

  bool has_lead(VertexId v) const;
  /// Channel index of the lead on `v`, if any.
  std::optional<std::size_t> channel_of(VertexId v) const;

  OpenGraph with_entrance(std::size_t entrance) const;

  /// Custom vertices whose local map is not unitary to 1e-12.
  std::span<const VertexId> unitarity_warnings() const noexcept { return warnings_; }

 private:
  MetricGraph base_;
  std::vector<VertexId> leads_;
  std::vector<int> lead_channel_;  // per vertex (0-based), -1 when no lead
  std::size_t entrance_;
  std::vector<VertexId> warnings_;
};

struct VertexAmplitudes {
  cplx r;
  cplx t;
};

/// Edge incidences plus one if the vertex carries a lead.
int effective_degree(const OpenGraph& og, VertexId v);

/// k-independent local amplitudes from the boundary condition:
/// Neumann r = 2/d - 1, t = 2/d; Dirichlet r = -1, t = 0.
VertexAmplitudes vertex_amplitudes(const OpenGraph& og, VertexId v);

}  // namespace qgs
