#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qgs/graph.hpp"
#include "qgs/probability.hpp"

namespace qgs {

/// Orientation of a physical edge. Unknown 2s is edge s traversed a->b,
/// unknown 2s+1 is b->a.
struct DirectedEdge {
  VertexId tail;
  VertexId head;
  std::size_t edge;
};

/// (I - M) P = b for the path families P_{i->j} leading to exit `exit_vertex`.
struct PathFamilySystem {
  VertexId exit_vertex;
  double wavenumber;
  std::vector<DirectedEdge> unknowns;
  Eigen::MatrixXcd matrix;
  Eigen::VectorXcd rhs;
};

struct FamilySolution {
  Eigen::VectorXcd values;
  double residual;   // ||(I - M) P - b||_inf
  double condition;  // 1-norm condition estimate
};

/// Directed edges in unknown order.
std::vector<DirectedEdge> directed_edges(const MetricGraph& g);

/// A family P_{i->j} picks up z = e^{ikl} along its edge and, at j:
///   - exits through the lead on j when j is the exit (t_j),
///   - reflects back along the same physical edge (r_j),
///   - transmits into every other edge at j, parallel siblings included (t_j).
PathFamilySystem assemble_system(const OpenGraph& og, VertexId exit_vertex, double k);

/// Dense LU with partial pivoting. SingularSystem when the smallest pivot
/// falls below 1e-14 times the matrix infinity norm.
FamilySolution solve_families(const PathFamilySystem& sys);

/// sigma^{(f,i)}(k) = delta_{fi} r_i + t_i * sum over edges i->j of P_{i->j}.
cplx scattering_amplitude(const OpenGraph& og, VertexId exit_vertex, VertexId entrance_vertex,
                          double k);

class ScatteringMatrix {
 public:
  ScatteringMatrix(double k, std::vector<VertexId> leads, Eigen::MatrixXcd amplitudes);

  double wavenumber() const noexcept { return k_; }
  std::size_t channel_count() const noexcept { return leads_.size(); }
  const std::vector<VertexId>& leads() const noexcept { return leads_; }
  /// Row = exit channel, column = entrance channel.
  const Eigen::MatrixXcd& amplitudes() const noexcept { return amplitudes_; }
  cplx amplitude(VertexId exit_vertex, VertexId entrance_vertex) const;
  std::size_t channel_of(VertexId v) const;

  /// max |sigma^{(f,i)} - sigma^{(i,f)}|
  double reciprocity_defect() const;
  /// max over columns of |sum_f |sigma^{(f,i)}|^2 - 1|
  double unitarity_defect() const;

 private:
  double k_;
  std::vector<VertexId> leads_;
  Eigen::MatrixXcd amplitudes_;
};

/// Full l x l matrix. The path-family matrix does not depend on the exit,
/// so one factorization serves every exit channel.
ScatteringMatrix scattering_matrix(const OpenGraph& og, double k);

/// p_j = |sigma^{(j, entrance)}|^2, renormalized when the column sum is
/// within 1e-8 of one; UnitarityViolation otherwise.
ProbabilityVector probabilities(const ScatteringMatrix& sm, VertexId entrance_vertex);

/// Green's function in natural units (m = hbar = 1).
struct GreensValue {
  cplx value;
  double x_i;
  double x_f;
};

GreensValue greens_function(const OpenGraph& og, VertexId exit_vertex, VertexId entrance_vertex,
                            double k, double x_i, double x_f);

}  // namespace qgs
