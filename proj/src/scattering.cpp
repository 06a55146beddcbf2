#include "qgs/scattering.hpp"

#include <cmath>
#include <string>

namespace qgs {
namespace {

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::NonPositiveWavenumber, "k = " + std::to_string(k));
  }
}

void require_lead(const OpenGraph& og, VertexId v) {
  if (!og.has_lead(v)) {
    throw Error(ErrorCode::NotALeadVertex, "vertex " + std::to_string(v) + " carries no lead");
  }
}

// Per-vertex amplitudes and outgoing directed edges, computed once per graph.
struct Layout {
  std::vector<DirectedEdge> dirs;
  std::vector<std::vector<std::size_t>> outgoing;  // by vertex (0-based)
  std::vector<VertexAmplitudes> amps;               // by vertex (0-based)
};

Layout make_layout(const OpenGraph& og) {
  const MetricGraph& g = og.base();
  Layout lay;
  lay.dirs = directed_edges(g);
  lay.outgoing.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t e = 0; e < lay.dirs.size(); ++e) {
    lay.outgoing[static_cast<std::size_t>(lay.dirs[e].tail - 1)].push_back(e);
  }
  lay.amps.reserve(lay.outgoing.size());
  for (VertexId v = 1; v <= g.vertex_count(); ++v) lay.amps.push_back(vertex_amplitudes(og, v));
  return lay;
}

Eigen::MatrixXcd family_matrix(const OpenGraph& og, const Layout& lay, double k) {
  const auto n = static_cast<Eigen::Index>(lay.dirs.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n);
  const auto edges = og.base().edges();
  for (Eigen::Index row = 0; row < n; ++row) {
    const DirectedEdge& d = lay.dirs[static_cast<std::size_t>(row)];
    const cplx z = std::exp(cplx(0.0, k * edges[d.edge].length));
    const VertexAmplitudes& at = lay.amps[static_cast<std::size_t>(d.head - 1)];
    for (std::size_t col : lay.outgoing[static_cast<std::size_t>(d.head - 1)]) {
      const bool reverse = lay.dirs[col].edge == d.edge;
      a(row, static_cast<Eigen::Index>(col)) -= z * (reverse ? at.r : at.t);
    }
  }
  return a;
}

Eigen::VectorXcd family_rhs(const OpenGraph& og, const Layout& lay, VertexId exit_vertex,
                            double k) {
  const auto n = static_cast<Eigen::Index>(lay.dirs.size());
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
  const auto edges = og.base().edges();
  const cplx t_exit = lay.amps[static_cast<std::size_t>(exit_vertex - 1)].t;
  for (Eigen::Index row = 0; row < n; ++row) {
    const DirectedEdge& d = lay.dirs[static_cast<std::size_t>(row)];
    if (d.head == exit_vertex) b(row) = std::exp(cplx(0.0, k * edges[d.edge].length)) * t_exit;
  }
  return b;
}

Eigen::PartialPivLU<Eigen::MatrixXcd> factorize(const Eigen::MatrixXcd& a, double k) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(pivot >= 1e-14 * norm)) {
    throw Error(ErrorCode::SingularSystem, "pivot " + std::to_string(pivot) + " at k = " +
                                               std::to_string(k) + " (resonance or degenerate k)");
  }
  return lu;
}

cplx amplitude_from_families(const Layout& lay, const Eigen::VectorXcd& families,
                             VertexId exit_vertex, VertexId entrance_vertex) {
  const VertexAmplitudes& at = lay.amps[static_cast<std::size_t>(entrance_vertex - 1)];
  cplx sum = 0.0;
  for (std::size_t e : lay.outgoing[static_cast<std::size_t>(entrance_vertex - 1)]) {
    sum += families(static_cast<Eigen::Index>(e));
  }
  return (exit_vertex == entrance_vertex ? at.r : cplx(0.0)) + at.t * sum;
}

}  // namespace

std::vector<DirectedEdge> directed_edges(const MetricGraph& g) {
  std::vector<DirectedEdge> dirs;
  dirs.reserve(2 * g.edge_count());
  const auto edges = g.edges();
  for (std::size_t s = 0; s < edges.size(); ++s) {
    dirs.push_back({edges[s].a, edges[s].b, s});
    dirs.push_back({edges[s].b, edges[s].a, s});
  }
  return dirs;
}

PathFamilySystem assemble_system(const OpenGraph& og, VertexId exit_vertex, double k) {
  require_positive_k(k);
  require_lead(og, exit_vertex);
  Layout lay = make_layout(og);
  PathFamilySystem sys{exit_vertex, k, {}, family_matrix(og, lay, k),
                       family_rhs(og, lay, exit_vertex, k)};
  sys.unknowns = std::move(lay.dirs);
  return sys;
}

FamilySolution solve_families(const PathFamilySystem& sys) {
  if (sys.matrix.rows() == 0) return {Eigen::VectorXcd(), 0.0, 1.0};
  const auto lu = factorize(sys.matrix, sys.wavenumber);
  FamilySolution out;
  out.values = lu.solve(sys.rhs);
  out.residual = (sys.matrix * out.values - sys.rhs).cwiseAbs().maxCoeff();
  const double rcond = lu.rcond();
  out.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  return out;
}

cplx scattering_amplitude(const OpenGraph& og, VertexId exit_vertex, VertexId entrance_vertex,
                          double k) {
  require_positive_k(k);
  require_lead(og, exit_vertex);
  require_lead(og, entrance_vertex);
  const Layout lay = make_layout(og);
  PathFamilySystem sys{exit_vertex, k, lay.dirs, family_matrix(og, lay, k),
                       family_rhs(og, lay, exit_vertex, k)};
  const FamilySolution sol = solve_families(sys);
  return amplitude_from_families(lay, sol.values, exit_vertex, entrance_vertex);
}

ScatteringMatrix::ScatteringMatrix(double k, std::vector<VertexId> leads,
                                   Eigen::MatrixXcd amplitudes)
    : k_(k), leads_(std::move(leads)), amplitudes_(std::move(amplitudes)) {}

std::size_t ScatteringMatrix::channel_of(VertexId v) const {
  for (std::size_t c = 0; c < leads_.size(); ++c) {
    if (leads_[c] == v) return c;
  }
  throw Error(ErrorCode::NotALeadVertex, "vertex " + std::to_string(v) + " carries no lead");
}

cplx ScatteringMatrix::amplitude(VertexId exit_vertex, VertexId entrance_vertex) const {
  return amplitudes_(static_cast<Eigen::Index>(channel_of(exit_vertex)),
                     static_cast<Eigen::Index>(channel_of(entrance_vertex)));
}

double ScatteringMatrix::reciprocity_defect() const {
  return (amplitudes_ - amplitudes_.transpose()).cwiseAbs().maxCoeff();
}

double ScatteringMatrix::unitarity_defect() const {
  const Eigen::RowVectorXd sums = amplitudes_.cwiseAbs2().colwise().sum();
  return (sums.array() - 1.0).abs().maxCoeff();
}

ScatteringMatrix scattering_matrix(const OpenGraph& og, double k) {
  require_positive_k(k);
  const Layout lay = make_layout(og);
  const auto l = static_cast<Eigen::Index>(og.channel_count());
  const auto leads = og.leads();
  Eigen::MatrixXcd sigma(l, l);

  if (lay.dirs.empty()) {
    sigma.setZero();
    for (Eigen::Index c = 0; c < l; ++c) sigma(c, c) = lay.amps[static_cast<std::size_t>(leads[c] - 1)].r;
    return ScatteringMatrix(k, {leads.begin(), leads.end()}, std::move(sigma));
  }

  const auto lu = factorize(family_matrix(og, lay, k), k);
  for (Eigen::Index f = 0; f < l; ++f) {
    const Eigen::VectorXcd families = lu.solve(family_rhs(og, lay, leads[f], k));
    for (Eigen::Index i = 0; i < l; ++i) {
      sigma(f, i) = amplitude_from_families(lay, families, leads[f], leads[i]);
    }
  }
  return ScatteringMatrix(k, {leads.begin(), leads.end()}, std::move(sigma));
}

ProbabilityVector probabilities(const ScatteringMatrix& sm, VertexId entrance_vertex) {
  const auto col = static_cast<Eigen::Index>(sm.channel_of(entrance_vertex));
  std::vector<double> p(sm.channel_count());
  for (std::size_t j = 0; j < p.size(); ++j) {
    p[j] = std::norm(sm.amplitudes()(static_cast<Eigen::Index>(j), col));
  }
  return ProbabilityVector::normalized(std::move(p), 1e-8);
}

GreensValue greens_function(const OpenGraph& og, VertexId exit_vertex, VertexId entrance_vertex,
                            double k, double x_i, double x_f) {
  if (!(x_i >= 0.0) || !(x_f >= 0.0)) {
    throw Error(ErrorCode::BadParameter, "lead coordinates must be non-negative");
  }
  const cplx sigma = scattering_amplitude(og, exit_vertex, entrance_vertex, k);
  const cplx ik(0.0, k);
  cplx bracket = sigma * std::exp(ik * (x_f + x_i));
  if (exit_vertex == entrance_vertex) bracket += std::exp(ik * std::abs(x_f - x_i));
  return {bracket / ik, x_i, x_f};
}

}  // namespace qgs
