#include "qgs/graph.hpp"

#include <cmath>
#include <utility>

namespace qgs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadEndpoint: return "BadEndpoint";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateLead: return "DuplicateLead";
    case ErrorCode::NoLeads: return "NoLeads";
    case ErrorCode::BadEntrance: return "BadEntrance";
    case ErrorCode::NotALeadVertex: return "NotALeadVertex";
    case ErrorCode::NonPositiveWavenumber: return "NonPositiveWavenumber";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::UnitarityViolation: return "UnitarityViolation";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::DegenerateBranch: return "DegenerateBranch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NoPeriod: return "NoPeriod";
    case ErrorCode::QuadratureStalled: return "QuadratureStalled";
    case ErrorCode::SpecParse: return "SpecParse";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::EngineFailure: return "EngineFailure";
  }
  return "Unknown";
}

MetricGraph::MetricGraph(int vertex_count, std::vector<Edge> edges, std::vector<Boundary> boundary)
    : vertex_count_(vertex_count), edges_(std::move(edges)), boundary_(std::move(boundary)) {
  if (vertex_count_ < 1) {
    throw Error(ErrorCode::UnknownVertex, "a graph needs at least one vertex");
  }
  if (boundary_.empty()) {
    boundary_.assign(static_cast<std::size_t>(vertex_count_), Neumann{});
  } else if (boundary_.size() != static_cast<std::size_t>(vertex_count_)) {
    throw Error(ErrorCode::UnknownVertex, "boundary list size differs from vertex count");
  }
}

const Boundary& MetricGraph::boundary(VertexId v) const {
  if (v < 1 || v > vertex_count_) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
  return boundary_[static_cast<std::size_t>(v - 1)];
}

std::vector<std::vector<int>> MetricGraph::adjacency() const {
  const auto n = static_cast<std::size_t>(vertex_count_);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : edges_) {
    a[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] = 1;
    a[static_cast<std::size_t>(e.b - 1)][static_cast<std::size_t>(e.a - 1)] = 1;
  }
  return a;
}

std::optional<GraphIssue> validate_graph(const MetricGraph& g) {
  const auto edges = g.edges();
  for (std::size_t s = 0; s < edges.size(); ++s) {
    const Edge& e = edges[s];
    const auto where = "edge " + std::to_string(s) + " (" + std::to_string(e.a) + "," +
                       std::to_string(e.b) + ")";
    if (e.a < 1 || e.a > g.vertex_count() || e.b < 1 || e.b > g.vertex_count()) {
      return GraphIssue{ErrorCode::BadEndpoint, s, where + ": endpoint outside [1, v]"};
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      return GraphIssue{ErrorCode::NonPositiveLength, s, where + ": length must be positive"};
    }
    if (e.a == e.b) {
      return GraphIssue{ErrorCode::SelfLoop, s, where + ": self-loop"};
    }
  }
  return std::nullopt;
}

OpenGraph::OpenGraph(MetricGraph base, std::vector<VertexId> leads, std::size_t entrance)
    : base_(std::move(base)), leads_(std::move(leads)), entrance_(entrance) {
  if (auto issue = validate_graph(base_)) {
    throw Error(issue->code, issue->message);
  }
  if (leads_.empty()) {
    throw Error(ErrorCode::NoLeads, "an open graph needs at least one lead");
  }
  lead_channel_.assign(static_cast<std::size_t>(base_.vertex_count()), -1);
  for (std::size_t c = 0; c < leads_.size(); ++c) {
    const VertexId v = leads_[c];
    if (v < 1 || v > base_.vertex_count()) {
      throw Error(ErrorCode::UnknownVertex, "lead on vertex " + std::to_string(v));
    }
    int& slot = lead_channel_[static_cast<std::size_t>(v - 1)];
    if (slot >= 0) {
      throw Error(ErrorCode::DuplicateLead, "vertex " + std::to_string(v) + " has two leads");
    }
    slot = static_cast<int>(c);
  }
  if (entrance_ >= leads_.size()) {
    throw Error(ErrorCode::BadEntrance, "entrance index " + std::to_string(entrance_));
  }

  for (VertexId v = 1; v <= base_.vertex_count(); ++v) {
    const auto* custom = std::get_if<Custom>(&base_.boundary(v));
    if (custom == nullptr) continue;
    const int d = effective_degree(*this, v);
    const double norm = std::norm(custom->r) + (d - 1) * std::norm(custom->t);
    if (d >= 1 && std::abs(norm - 1.0) > 1e-12) warnings_.push_back(v);
  }
}

bool OpenGraph::has_lead(VertexId v) const { return channel_of(v).has_value(); }

std::optional<std::size_t> OpenGraph::channel_of(VertexId v) const {
  if (v < 1 || v > base_.vertex_count()) {
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
  const int c = lead_channel_[static_cast<std::size_t>(v - 1)];
  if (c < 0) return std::nullopt;
  return static_cast<std::size_t>(c);
}

OpenGraph OpenGraph::with_entrance(std::size_t entrance) const {
  OpenGraph copy = *this;
  if (entrance >= leads_.size()) {
    throw Error(ErrorCode::BadEntrance, "entrance index " + std::to_string(entrance));
  }
  copy.entrance_ = entrance;
  return copy;
}

int effective_degree(const OpenGraph& og, VertexId v) {
  int d = og.has_lead(v) ? 1 : 0;
  for (const Edge& e : og.base().edges()) {
    if (e.a == v) ++d;
    if (e.b == v) ++d;
  }
  return d;
}

VertexAmplitudes vertex_amplitudes(const OpenGraph& og, VertexId v) {
  const int d = effective_degree(og, v);
  return std::visit(
      [d](const auto& bc) -> VertexAmplitudes {
        using T = std::decay_t<decltype(bc)>;
        if constexpr (std::is_same_v<T, Custom>) {
          return {bc.r, bc.t};
        } else if constexpr (std::is_same_v<T, Dirichlet>) {
          return {-1.0, 0.0};
        } else {
          if (d == 0) return {1.0, 0.0};
          return {2.0 / d - 1.0, 2.0 / d};
        }
      },
      og.base().boundary(v));
}

}  // namespace qgs
